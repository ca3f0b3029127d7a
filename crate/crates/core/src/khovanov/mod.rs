//! Khovanov cube complex and its homology over GF(2) or the rationals.
//!
//! Generators are pairs (state, labelling), one label `v₊`/`v₋` per circle,
//! stored as a bitmask with bit `i` set when circle `i` carries `v₋`.
//! Circles are numbered by their lowest port. Gradings are normalized:
//! `t = r - n₋`, `q = #v₊ - #v₋ + r + n₊ - 2n₋`.

mod linalg;
mod table;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atom::{build_atom, Atom};
use crate::diagram::{Diagram, Orientation};
use crate::error::{Error, Result};
use crate::state_sum::{check_limit, trace_circles, StateCircles};

pub use linalg::{rank_gf2, rank_q, SparseRow};
pub use table::{broad_1_complete, is_2_complete, KhEntry, KhTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "gf2", alias = "GF2", alias = "z2")]
    Gf2,
    #[serde(rename = "q", alias = "Q")]
    Q,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Q => "q",
        }
    }
}

impl std::str::FromStr for Field {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "z2" | "f2" => Ok(Field::Gf2),
            "q" | "rational" | "rationals" => Ok(Field::Q),
            other => Err(format!("unknown field `{other}` (expected gf2 or q)")),
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Why rational coefficients are unavailable for this atom, if they are.
pub fn rational_obstruction(atom: &Atom) -> Option<String> {
    let bad = atom.piece_orientability().iter().filter(|o| !**o).count();
    (bad > 0).then(|| {
        format!("the atom has {bad} non-orientable piece(s); only gf2 coefficients apply")
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub state: u64,
    pub label: u64,
}

/// The graded cube complex. Block `(t, q)` lists its generators; the
/// differential out of a block has one sparse row per generator, indexing
/// generators of block `(t + 1, q)`.
#[derive(Clone, Debug)]
pub struct KhChainComplex {
    field: Field,
    n_plus: usize,
    n_minus: usize,
    blocks: BTreeMap<(i64, i64), Vec<Generator>>,
    differentials: BTreeMap<(i64, i64), Vec<SparseRow>>,
}

enum EdgeKind {
    Merge { a: u32, b: u32, into: u32 },
    Split { from: u32, a: u32, b: u32 },
    SingleCycle,
}

struct EdgeMap {
    kind: EdgeKind,
    // image of every circle not touching the crossing
    moved: Vec<(u32, u32)>,
}

fn edge_map(d: &Diagram, src: &StateCircles, dst: &StateCircles, c: usize, reps: &[usize]) -> EdgeMap {
    let x = 4 * c;
    let (ca, cb) = (src.circle_of_port[x], src.circle_of_port[x + 2]);
    let (c1, c2) = (dst.circle_of_port[x + 1], dst.circle_of_port[x + 3]);
    let traced_src = src.count - d.free_loops();
    let traced_dst = dst.count - d.free_loops();
    let mut moved = vec![];
    for i in 0..src.count as u32 {
        if i == ca || i == cb {
            continue;
        }
        let j = if (i as usize) < traced_src {
            dst.circle_of_port[reps[i as usize]]
        } else {
            (i as usize - traced_src + traced_dst) as u32
        };
        moved.push((i, j));
    }
    let kind = match (ca == cb, c1 == c2) {
        (false, _) => EdgeKind::Merge { a: ca, b: cb, into: c1 },
        (true, false) => EdgeKind::Split { from: ca, a: c1, b: c2 },
        (true, true) => EdgeKind::SingleCycle,
    };
    EdgeMap { kind, moved }
}

fn representatives(sc: &StateCircles) -> Vec<usize> {
    let mut reps = vec![usize::MAX; sc.count];
    for (p, &c) in sc.circle_of_port.iter().enumerate().rev() {
        reps[c as usize] = p;
    }
    reps
}

/// Builds the normalized Khovanov complex. Over `Q` the atom must be
/// orientable; single-cycle edges (one circle to one circle, possible only
/// for virtual diagrams) are zero maps, which is legal over GF(2) only.
pub fn build_complex(d: &Diagram, o: &Orientation, field: Field) -> Result<KhChainComplex> {
    if field == Field::Q {
        if let Some(why) = rational_obstruction(&build_atom(d)) {
            return Err(Error::FieldUnsupported(why));
        }
    }
    let n = d.crossing_count();
    check_limit(d, 62, "Khovanov complex")?;
    let (n_plus, n_minus) = d.crossing_signs(o)?;
    let states: Vec<StateCircles> = (0..1u64 << n).into_par_iter().map(|s| trace_circles(d, s)).collect();

    let grading = |s: u64, label: u64, circles: usize| -> (i64, i64) {
        let r = s.count_ones() as i64;
        let minus = label.count_ones() as i64;
        let t = r - n_minus as i64;
        let q = circles as i64 - 2 * minus + r + n_plus as i64 - 2 * n_minus as i64;
        (t, q)
    };

    let mut blocks: BTreeMap<(i64, i64), Vec<Generator>> = BTreeMap::new();
    let mut index: Vec<Vec<u32>> = Vec::with_capacity(states.len());
    for (s, sc) in states.iter().enumerate() {
        let mut idx = Vec::with_capacity(1 << sc.count);
        for label in 0..1u64 << sc.count {
            let key = grading(s as u64, label, sc.count);
            let block = blocks.entry(key).or_default();
            idx.push(block.len() as u32);
            block.push(Generator { state: s as u64, label });
        }
        index.push(idx);
    }
    let reps: Vec<Vec<usize>> = states.par_iter().map(representatives).collect();

    let keys: Vec<(i64, i64)> = blocks.keys().copied().collect();
    let differentials = keys
        .par_iter()
        .filter(|&&(t, q)| blocks.contains_key(&(t + 1, q)))
        .map(|&key| {
            let gens = &blocks[&key];
            let mut rows = Vec::with_capacity(gens.len());
            let mut cache: HashMap<(u64, usize), EdgeMap> = HashMap::new();
            for g in gens {
                let mut row: Vec<(u32, i64)> = vec![];
                for c in 0..n {
                    if g.state >> c & 1 == 1 {
                        continue;
                    }
                    let target = g.state | 1 << c;
                    let sign = if (g.state & ((1 << c) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                    let em = cache.entry((g.state, c)).or_insert_with(|| {
                        edge_map(d, &states[g.state as usize], &states[target as usize], c, &reps[g.state as usize])
                    });
                    let mut base = 0u64;
                    for &(i, j) in &em.moved {
                        base |= (g.label >> i & 1) << j;
                    }
                    let bit = |i: u32| g.label >> i & 1;
                    let images: Vec<u64> = match em.kind {
                        EdgeKind::Merge { a, b, into } => match (bit(a), bit(b)) {
                            (1, 1) => vec![],
                            (x, y) => vec![base | (x | y) << into],
                        },
                        EdgeKind::Split { from, a, b } => match bit(from) {
                            0 => vec![base | 1 << b, base | 1 << a],
                            _ => vec![base | 1 << a | 1 << b],
                        },
                        EdgeKind::SingleCycle => {
                            if field == Field::Q {
                                return Err(Error::FieldUnsupported(format!(
                                    "crossing {c} joins one circle to one circle"
                                )));
                            }
                            vec![]
                        }
                    };
                    for label in images {
                        row.push((index[target as usize][label as usize], sign));
                    }
                }
                row.sort_unstable_by_key(|&(j, _)| j);
                rows.push(row);
            }
            Ok((key, rows))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;

    let complex = KhChainComplex { field, n_plus, n_minus, blocks, differentials };
    complex.check_square_zero()?;
    Ok(complex)
}

impl KhChainComplex {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn crossing_signs(&self) -> (usize, usize) {
        (self.n_plus, self.n_minus)
    }

    /// Generators of the block `(t, q)`.
    pub fn block(&self, t: i64, q: i64) -> &[Generator] {
        self.blocks.get(&(t, q)).map_or(&[], Vec::as_slice)
    }

    pub fn bigradings(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.blocks.keys().copied()
    }

    pub fn total_dim(&self) -> usize {
        self.blocks.values().map(Vec::len).sum()
    }

    /// Differential out of block `(t, q)`, as one sparse row per generator.
    pub fn differential(&self, t: i64, q: i64) -> &[SparseRow] {
        self.differentials.get(&(t, q)).map_or(&[], Vec::as_slice)
    }

    fn check_square_zero(&self) -> Result<()> {
        for (&(t, q), first) in &self.differentials {
            let Some(second) = self.differentials.get(&(t + 1, q)) else { continue };
            for row in first {
                let mut acc: HashMap<u32, i64> = HashMap::new();
                for &(j, a) in row {
                    for &(k, b) in &second[j as usize] {
                        *acc.entry(k).or_insert(0) += a * b;
                    }
                }
                let zero = match self.field {
                    Field::Q => acc.values().all(|&v| v == 0),
                    Field::Gf2 => acc.values().all(|&v| v % 2 == 0),
                };
                if !zero {
                    return Err(Error::NotAComplex { t, q });
                }
            }
        }
        Ok(())
    }

    fn rank(&self, t: i64, q: i64) -> usize {
        let rows = self.differential(t, q);
        if rows.is_empty() {
            return 0;
        }
        match self.field {
            Field::Gf2 => rank_gf2(rows, self.block(t + 1, q).len()),
            Field::Q => rank_q(rows),
        }
    }
}

/// `dim H^{t,q} = dim C^{t,q} - rank d^{t,q} - rank d^{t-1,q}`, one
/// elimination per bigraded block.
pub fn homology(c: &KhChainComplex) -> KhTable {
    let keys: Vec<(i64, i64)> = c.differentials.keys().copied().collect();
    let ranks: HashMap<(i64, i64), usize> = keys.par_iter().map(|&(t, q)| ((t, q), c.rank(t, q))).collect();
    let rank = |t: i64, q: i64| ranks.get(&(t, q)).copied().unwrap_or(0);
    KhTable::new(
        c.field,
        c.blocks.iter().map(|(&(t, q), gens)| KhEntry {
            t,
            q,
            dim: (gens.len() - rank(t, q) - rank(t - 1, q)) as u64,
        }),
    )
}

/// Default crossing limits for building complexes.
pub fn default_limit(field: Field) -> usize {
    match field {
        Field::Q => 12,
        Field::Gf2 => 14,
    }
}

/// Canonically oriented Khovanov homology, refusing diagrams above `limit`.
pub fn khovanov_table(d: &Diagram, field: Field, limit: usize) -> Result<KhTable> {
    check_limit(d, limit, "Khovanov homology")?;
    let complex = build_complex(d, &d.orient(), field)?;
    Ok(homology(&complex))
}
