//! The atom of a diagram: the closed surface obtained by gluing white cells
//! (A-state circles) and black cells (B-state circles) to the 4-valent graph
//! of classical crossings.

use serde::{Deserialize, Serialize};

use crate::diagram::{corner, crossing_of, Diagram, Port};
use crate::dsu::ParityDsu;
use crate::half::HalfInt;

/// A cell boundary: arcs in traversal order, each with a direction bit
/// (`true` when the arc is run from its lower port to its higher port).
pub type Walk = Vec<(usize, bool)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub white_cells: Vec<Walk>,
    pub black_cells: Vec<Walk>,
    /// Classical crossings, plus one 2-valent vertex on each crossing-free loop.
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Connected piece of every white cell, then of every black cell.
    piece_of_cell: Vec<usize>,
    /// Per piece: (classical crossings, white cells, black cells).
    pieces: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusValue {
    pub twice_genus: u64,
    pub orientable: bool,
}

impl GenusValue {
    pub fn genus(&self) -> HalfInt {
        HalfInt::from_twice(self.twice_genus as i64)
    }
}

fn trace_cells(d: &Diagram, arc_of: &[usize], b_smoothing: bool) -> (Vec<Walk>, Vec<Port>) {
    let mut seen = vec![false; d.port_count()];
    let mut walks = vec![];
    let mut first_ports = vec![];
    for start in 0..d.port_count() {
        if seen[start] {
            continue;
        }
        let mut walk = vec![];
        let mut p = start;
        loop {
            let q = d.partner(p);
            seen[p] = true;
            seen[q] = true;
            walk.push((arc_of[p], p < q));
            p = corner(q, b_smoothing);
            if p == start {
                break;
            }
        }
        walks.push(walk);
        first_ports.push(start);
    }
    (walks, first_ports)
}

/// Builds the atom: white cells are the all-A circles, black cells the all-B
/// circles, traced as boundary walks. Each crossing-free loop contributes a
/// sphere (one white and one black cell sharing the loop as their edge).
pub fn build_atom(d: &Diagram) -> Atom {
    let arc_of = d.arc_index_table();
    let port_arcs = d.port_count() / 2;
    let (mut white, white_ports) = trace_cells(d, &arc_of, false);
    let (mut black, black_ports) = trace_cells(d, &arc_of, true);

    let (piece_of_crossing, crossing_pieces) = d.piece_of_crossing();
    let mut pieces = vec![(0, 0, 0); crossing_pieces];
    for &pc in &piece_of_crossing {
        pieces[pc].0 += 1;
    }
    let mut piece_of_cell: Vec<usize> = vec![];
    for &p in &white_ports {
        let pc = piece_of_crossing[crossing_of(p)];
        pieces[pc].1 += 1;
        piece_of_cell.push(pc);
    }
    let mut black_pieces = vec![];
    for &p in &black_ports {
        let pc = piece_of_crossing[crossing_of(p)];
        pieces[pc].2 += 1;
        black_pieces.push(pc);
    }
    for l in 0..d.free_loops() {
        let pc = pieces.len();
        pieces.push((0, 1, 1));
        white.push(vec![(port_arcs + l, true)]);
        black.push(vec![(port_arcs + l, true)]);
        piece_of_cell.push(pc);
        black_pieces.push(pc);
    }
    piece_of_cell.extend(black_pieces);

    Atom {
        white_cells: white,
        black_cells: black,
        vertex_count: d.crossing_count() + d.free_loops(),
        edge_count: port_arcs + d.free_loops(),
        piece_of_cell,
        pieces,
    }
}

impl Atom {
    pub fn white_count(&self) -> usize {
        self.white_cells.len()
    }

    pub fn black_count(&self) -> usize {
        self.black_cells.len()
    }

    /// Number of connected pieces; crossing-free loops are separate spheres.
    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    /// Euler characteristic `a + b - n` of each piece.
    pub fn piece_euler_characteristics(&self) -> Vec<i64> {
        self.pieces
            .iter()
            .map(|&(v, w, b)| w as i64 + b as i64 - v as i64)
            .collect()
    }

    /// Orientability of each piece: cells can be oriented so that every
    /// edge is run in opposite directions by its white and black walks.
    pub fn piece_orientability(&self) -> Vec<bool> {
        let a = self.white_count();
        let mut dsu = ParityDsu::new(a + self.black_count());
        // per edge: (white cell, its direction), (black cell, its direction)
        let mut white_use = vec![(usize::MAX, false); self.edge_count];
        for (i, walk) in self.white_cells.iter().enumerate() {
            for &(e, fwd) in walk {
                white_use[e] = (i, fwd);
            }
        }
        let mut ok = vec![true; self.pieces.len()];
        for (j, walk) in self.black_cells.iter().enumerate() {
            for &(e, fwd) in walk {
                let (w, wfwd) = white_use[e];
                if !dsu.union(w, a + j, !(wfwd ^ fwd)) {
                    ok[self.piece_of_cell[w]] = false;
                }
            }
        }
        ok
    }
}

/// `V - E + F`, which equals `a + b - n`.
pub fn euler_characteristic(atom: &Atom) -> i64 {
    atom.vertex_count as i64 - atom.edge_count as i64 + (atom.white_count() + atom.black_count()) as i64
}

pub fn orientable(atom: &Atom) -> bool {
    atom.piece_orientability().into_iter().all(|o| o)
}

/// Genus of the atom, summed over connected pieces. Non-orientable pieces
/// contribute `(2 - χ)/2`, which may be a half-integer.
pub fn genus(atom: &Atom) -> GenusValue {
    let twice: i64 = atom.piece_euler_characteristics().iter().map(|chi| 2 - chi).sum();
    assert!(twice >= 0, "every piece has Euler characteristic at most 2");
    GenusValue { twice_genus: twice as u64, orientable: orientable(atom) }
}

/// Everything the `atom` report prints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomSummary {
    pub a: usize,
    pub b: usize,
    pub chi: i64,
    pub orientable: bool,
    pub twice_genus: u64,
}

impl AtomSummary {
    pub fn of(d: &Diagram) -> Self {
        let atom = build_atom(d);
        let g = genus(&atom);
        Self {
            a: atom.white_count(),
            b: atom.black_count(),
            chi: euler_characteristic(&atom),
            orientable: g.orientable,
            twice_genus: g.twice_genus,
        }
    }

    pub fn genus(&self) -> HalfInt {
        HalfInt::from_twice(self.twice_genus as i64)
    }
}
