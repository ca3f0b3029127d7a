//! Combinatorial virtual link diagrams.
//!
//! A diagram is a set of classical crossings, each with four ports numbered
//! counterclockwise, plus a perfect matching on ports (the arcs). Virtual
//! crossings are never stored: a strand running through virtual crossings is
//! a single arc, so detour moves are invisible in this encoding.
//!
//! ```text
//!     3   2
//!      \ /
//!       /      under-strand through 0-2, over-strand through 1-3
//!      / \
//!     0   1
//! ```
//!
//! The A-smoothing joins ports (0,1) and (2,3); the B-smoothing joins (1,2)
//! and (3,0). Port `p` of crossing `c` has global id `4c + p`.

mod parse;

use crate::error::{Error, Result};

pub use parse::{parse_gauss, parse_pd};

/// Global port id, `4 * crossing + local`.
pub type Port = usize;

#[inline]
pub(crate) fn crossing_of(p: Port) -> usize {
    p / 4
}

#[inline]
pub(crate) fn local_of(p: Port) -> usize {
    p % 4
}

/// The port on the other end of the strand passing straight through.
#[inline]
pub(crate) fn through(p: Port) -> Port {
    p ^ 2
}

/// The port joined to `p` by the chosen smoothing at its crossing.
#[inline]
pub(crate) fn corner(p: Port, b_smoothing: bool) -> Port {
    let base = p & !3;
    let l = local_of(p);
    if b_smoothing {
        base + (3 - l)
    } else {
        base + (l ^ 1)
    }
}

/// An arc of the diagram: either a matched pair of ports (`lo < hi`, or equal
/// ends never occur) or a closed loop meeting no classical crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcEnds {
    Ports(Port, Port),
    Loop(usize),
}

/// Handedness of an added Reidemeister-I kink, named by its bracket factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// Kink whose bracket factor is `-A^3`.
    Positive,
    /// Kink whose bracket factor is `-A^-3`.
    Negative,
}

/// One bit per classical crossing: 0 = A-smoothing, 1 = B-smoothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StateVector {
    bits: u64,
    len: usize,
}

impl StateVector {
    pub const MAX_LEN: usize = 64;

    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= Self::MAX_LEN, "state vectors hold at most 64 crossings");
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Self { bits: bits & mask, len }
    }

    pub fn all_a(len: usize) -> Self {
        Self::new(0, len)
    }

    pub fn all_b(len: usize) -> Self {
        Self::new(u64::MAX, len)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_b(&self, crossing: usize) -> bool {
        self.bits >> crossing & 1 == 1
    }

    /// Number of B-smoothings, `r(s)`.
    pub fn r(&self) -> u32 {
        self.bits.count_ones()
    }
}

/// Direction bit per link component, relative to the direction stored in
/// the diagram. Components are ordered by their lowest entry port.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    reversed: Vec<bool>,
}

impl Orientation {
    pub fn from_bits(reversed: Vec<bool>) -> Self {
        Self { reversed }
    }

    pub fn bits(&self) -> &[bool] {
        &self.reversed
    }

    pub fn len(&self) -> usize {
        self.reversed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reversed.is_empty()
    }
}

/// A diagram with a direction on every strand. Each crossing is kept with
/// its under-strand entering at port 0; the over-strand enters at 3 when the
/// crossing is positive and at 1 when it is negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    partner: Vec<Port>,
    incoming: Vec<bool>,
    loops: usize,
}

/// Walks the strand entering at `p` and marks its entries and exits.
fn mark_strand(partner: &[Port], incoming: &mut [Option<bool>], p: Port) {
    let mut cur = p;
    loop {
        incoming[cur] = Some(true);
        incoming[through(cur)] = Some(false);
        cur = partner[through(cur)];
        if cur == p {
            break;
        }
    }
}

/// Directs every strand. Hint layers are tried in order; within a layer the
/// lowest hinted port of a strand decides (later hints on the same strand
/// are ignored). Unhinted strands enter at their lowest port.
fn direct_strands(partner: &[Port], layers: &[&[Option<bool>]]) -> Vec<bool> {
    let mut incoming = vec![None; partner.len()];
    for hints in layers {
        for (p, hint) in hints.iter().enumerate() {
            if let (Some(v), None) = (hint, incoming[p]) {
                mark_strand(partner, &mut incoming, if *v { p } else { through(p) });
            }
        }
    }
    for p in 0..partner.len() {
        if incoming[p].is_none() {
            mark_strand(partner, &mut incoming, p);
        }
    }
    incoming.into_iter().map(|v| v.expect("every port lies on a strand")).collect()
}

impl Diagram {
    /// Builds a diagram from a port matching and a number of crossing-free
    /// loops, directing each strand so that it enters at port 0 of the
    /// first crossing it can (the PD convention).
    pub fn new(partner: Vec<Port>, loops: usize) -> Result<Self> {
        let hints = (0..partner.len()).map(|p| (p % 4 == 0).then_some(true)).collect::<Vec<_>>();
        Self::with_hints(partner, loops, &hints)
    }

    /// Like [`Diagram::new`], with explicit direction hints per port
    /// (`Some(true)` for an entry).
    pub(crate) fn with_hints(partner: Vec<Port>, loops: usize, hints: &[Option<bool>]) -> Result<Self> {
        Self::with_hint_layers(partner, loops, &[hints])
    }

    pub(crate) fn with_hint_layers(partner: Vec<Port>, loops: usize, layers: &[&[Option<bool>]]) -> Result<Self> {
        Self::validate(&partner, loops)?;
        let incoming = direct_strands(&partner, layers);
        Ok(Self { partner, incoming, loops }.normalized())
    }

    fn validate(partner: &[Port], loops: usize) -> Result<()> {
        if !partner.len().is_multiple_of(4) {
            return Err(Error::InvalidDiagram(format!(
                "port count {} is not a multiple of 4",
                partner.len()
            )));
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= partner.len() || partner[q] != p || q == p {
                return Err(Error::InvalidDiagram(format!(
                    "ports {p} and {q} are not matched to each other"
                )));
            }
        }
        if partner.is_empty() && loops == 0 {
            return Err(Error::InvalidDiagram("diagram has no components".into()));
        }
        Ok(())
    }

    /// Turns by a half rotation every crossing whose under-strand enters at
    /// port 2. The half rotation keeps both smoothings and the sign.
    fn normalized(self) -> Self {
        let flipped: Vec<bool> = (0..self.crossing_count()).map(|c| !self.incoming[4 * c]).collect();
        if !flipped.contains(&true) {
            return self;
        }
        self.permute_ports(|c| flipped[c].then_some([2, 3, 0, 1]))
    }

    /// Whether the strand through `p` enters its crossing there.
    pub fn is_incoming(&self, p: Port) -> bool {
        self.incoming[p]
    }

    /// The crossing-free circle.
    pub fn unknot() -> Self {
        Self { partner: vec![], incoming: vec![], loops: 1 }
    }

    /// Distant union of `k` crossing-free circles.
    pub fn unlink(k: usize) -> Result<Self> {
        Self::new(vec![], k)
    }

    /// Number of classical crossings, `n`.
    pub fn crossing_count(&self) -> usize {
        self.partner.len() / 4
    }

    pub fn port_count(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, p: Port) -> Port {
        self.partner[p]
    }

    pub fn free_loops(&self) -> usize {
        self.loops
    }

    /// Arcs ordered by lowest port, followed by the free loops.
    pub fn arcs(&self) -> Vec<ArcEnds> {
        let mut arcs: Vec<ArcEnds> = (0..self.partner.len())
            .filter(|&p| p < self.partner[p])
            .map(|p| ArcEnds::Ports(p, self.partner[p]))
            .collect();
        arcs.extend((0..self.loops).map(ArcEnds::Loop));
        arcs
    }

    /// Index into [`Diagram::arcs`] of the arc ending at `p`.
    pub(crate) fn arc_index_table(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.partner.len()];
        let mut next = 0;
        for p in 0..self.partner.len() {
            if p < self.partner[p] {
                idx[p] = next;
                idx[self.partner[p]] = next;
                next += 1;
            }
        }
        idx
    }

    /// Entry ports of each strand component in the stored direction,
    /// components ordered by their lowest entry port. Free loops are not
    /// included.
    pub(crate) fn strand_traces(&self) -> Vec<Vec<Port>> {
        let mut visited = vec![false; self.partner.len()];
        let mut traces = vec![];
        for start in 0..self.partner.len() {
            if visited[start] || !self.incoming[start] {
                continue;
            }
            let mut seq = vec![];
            let mut p = start;
            loop {
                seq.push(p);
                visited[p] = true;
                visited[through(p)] = true;
                p = self.partner[through(p)];
                if p == start {
                    break;
                }
            }
            traces.push(seq);
        }
        traces
    }

    /// Number of link components, free loops included.
    pub fn components(&self) -> usize {
        self.strand_traces().len() + self.loops
    }

    /// Number of connected pieces of the underlying 4-valent graph, each free
    /// loop counting as its own piece.
    pub fn connected_pieces(&self) -> usize {
        self.piece_of_crossing().1 + self.loops
    }

    /// Connected piece index of each crossing, and the number of such pieces.
    pub(crate) fn piece_of_crossing(&self) -> (Vec<usize>, usize) {
        let n = self.crossing_count();
        let mut piece = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if piece[start] != usize::MAX {
                continue;
            }
            piece[start] = count;
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                for l in 0..4 {
                    let d = crossing_of(self.partner[4 * c + l]);
                    if piece[d] == usize::MAX {
                        piece[d] = count;
                        stack.push(d);
                    }
                }
            }
            count += 1;
        }
        (piece, count)
    }

    /// The stored orientation: every component in its stored direction.
    pub fn orient(&self) -> Orientation {
        Orientation { reversed: vec![false; self.components()] }
    }

    /// For each port, whether the oriented strand enters its crossing there.
    pub fn incoming_ports(&self, o: &Orientation) -> Result<Vec<bool>> {
        let traces = self.strand_traces();
        if o.len() != traces.len() + self.loops {
            return Err(Error::InvalidDiagram(format!(
                "orientation has {} bits but the diagram has {} components",
                o.len(),
                traces.len() + self.loops
            )));
        }
        let mut incoming = vec![false; self.partner.len()];
        for (trace, &rev) in traces.iter().zip(&o.reversed) {
            for &p in trace {
                incoming[if rev { through(p) } else { p }] = true;
            }
        }
        Ok(incoming)
    }

    /// Signs (+1 / -1) of all crossings under the given orientation.
    pub fn crossing_sign_list(&self, o: &Orientation) -> Result<Vec<i8>> {
        let incoming = self.incoming_ports(o)?;
        Ok((0..self.crossing_count())
            .map(|c| {
                let iu = if incoming[4 * c] { 0 } else { 2 };
                let io = if incoming[4 * c + 1] { 1 } else { 3 };
                if io == (iu + 3) % 4 {
                    1
                } else {
                    -1
                }
            })
            .collect())
    }

    /// `(n₊, n₋)` under the given orientation.
    pub fn crossing_signs(&self, o: &Orientation) -> Result<(usize, usize)> {
        let signs = self.crossing_sign_list(o)?;
        let pos = signs.iter().filter(|&&s| s > 0).count();
        Ok((pos, signs.len() - pos))
    }

    pub fn writhe(&self, o: &Orientation) -> Result<i64> {
        Ok(self.crossing_sign_list(o)?.iter().map(|&s| s as i64).sum())
    }

    /// Whether every component alternates between over- and underpasses.
    pub fn is_alternating(&self) -> bool {
        self.strand_traces().iter().all(|trace| {
            let len = trace.len();
            (0..len).all(|i| {
                let under = local_of(trace[i]).is_multiple_of(2);
                let next_under = local_of(trace[(i + 1) % len]).is_multiple_of(2);
                len == 1 || under != next_under
            })
        })
    }

    fn permute_ports(&self, perm_of: impl Fn(usize) -> Option<[usize; 4]>) -> Self {
        let map = |p: Port| match perm_of(crossing_of(p)) {
            Some(perm) => (p & !3) + perm[local_of(p)],
            None => p,
        };
        let mut partner = vec![0; self.partner.len()];
        let mut incoming = vec![false; self.partner.len()];
        for (p, &q) in self.partner.iter().enumerate() {
            partner[map(p)] = map(q);
            incoming[map(p)] = self.incoming[p];
        }
        Self { partner, incoming, loops: self.loops }
    }

    /// Planar reflection: reverses the cyclic port order at every crossing,
    /// keeping over and under. An involution.
    pub fn mirror(&self) -> Self {
        self.permute_ports(|_| Some([0, 3, 2, 1]))
    }

    /// Replaces a crossing by the virtual-classical-virtual tangle with the
    /// same writhe. The over-strand moves to the old under ports and the
    /// cyclic order reverses, so both smoothings keep their port pairs.
    /// Strand directions are carried along.
    pub fn virtualize(&self, crossing: usize) -> Result<Self> {
        if crossing >= self.crossing_count() {
            return Err(Error::NoSuchCrossing(crossing));
        }
        Ok(self.permute_ports(|c| (c == crossing).then_some([1, 0, 3, 2])).normalized())
    }

    /// Directions of the old ports, for a move that appends crossings.
    fn hints_after_growth(&self, ports: usize) -> Vec<Option<bool>> {
        let mut hints: Vec<Option<bool>> = self.incoming.iter().map(|&v| Some(v)).collect();
        hints.resize(ports, None);
        hints
    }

    fn arc(&self, arc: usize) -> Result<ArcEnds> {
        self.arcs().get(arc).copied().ok_or(Error::NoSuchArc(arc))
    }

    fn with_new_crossings(&self, k: usize) -> (Vec<Port>, usize) {
        let base = self.partner.len();
        let mut partner = self.partner.clone();
        partner.resize(base + 4 * k, usize::MAX);
        (partner, base / 4)
    }

    /// Cuts `arc` open and joins its two ends to `entry` and `exit`.
    fn splice(partner: &mut [Port], loops: &mut usize, arc: ArcEnds, entry: Port, exit: Port) {
        match arc {
            ArcEnds::Ports(p, q) => {
                partner[p] = entry;
                partner[entry] = p;
                partner[q] = exit;
                partner[exit] = q;
            }
            ArcEnds::Loop(_) => {
                *loops -= 1;
                partner[entry] = exit;
                partner[exit] = entry;
            }
        }
    }

    /// Adds a Reidemeister-I kink on an arc.
    pub fn r1_add(&self, arc: usize, twist: Twist) -> Result<Self> {
        let ends = self.arc(arc)?;
        let (mut partner, c) = self.with_new_crossings(1);
        let x = 4 * c;
        let mut loops = self.loops;
        // the strand enters at 0, leaves through 2 into the kink loop, comes
        // back through the over-strand and leaves the crossing
        let (loop_end, exit) = match twist {
            Twist::Positive => (x + 3, x + 1),
            Twist::Negative => (x + 1, x + 3),
        };
        partner[x + 2] = loop_end;
        partner[loop_end] = x + 2;
        Self::splice(&mut partner, &mut loops, ends, x, exit);
        let hints = self.hints_after_growth(partner.len());
        Self::with_hints(partner, loops, &hints)
    }

    /// Pushes a piece of `over_arc` across a piece of `under_arc` (a
    /// Reidemeister-II bigon). The two arcs may coincide.
    pub fn r2_add(&self, over_arc: usize, under_arc: usize) -> Result<Self> {
        let over = self.arc(over_arc)?;
        let under = self.arc(under_arc)?;
        let (mut partner, c) = self.with_new_crossings(2);
        let (x, y) = (4 * c, 4 * c + 4);
        let mut loops = self.loops;
        let mut join = |a: Port, b: Port| {
            partner[a] = b;
            partner[b] = a;
        };
        // bigon sides
        join(x + 1, y + 1);
        join(x + 2, y);
        if over_arc == under_arc {
            // the fold: leave the over-strand at y3 and come back along the
            // under-strand from y2, which are adjacent on the tangle boundary
            join(y + 3, y + 2);
            Self::splice(&mut partner, &mut loops, over, x + 3, x);
        } else {
            Self::splice(&mut partner, &mut loops, over, x + 3, y + 3);
            Self::splice(&mut partner, &mut loops, under, x, y + 2);
        }
        let hints = self.hints_after_growth(partner.len());
        Self::with_hints(partner, loops, &hints)
    }

    /// Closure of a braid word on `strands` strands. Letter `±i` is the
    /// generator `σ_i^{±1}` (1-based), a positive crossing when positive.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidDiagram("a braid needs at least one strand".into()));
        }
        let n = word.len();
        let mut partner = vec![usize::MAX; 4 * n];
        let mut hints = vec![None; 4 * n];
        let mut first: Vec<Option<Port>> = vec![None; strands];
        let mut open: Vec<Option<Port>> = vec![None; strands];
        let attach = |pos: usize, entry: Port, first: &mut [Option<Port>], open: &[Option<Port>], partner: &mut [Port]| {
            match open[pos] {
                None => first[pos] = Some(entry),
                Some(o) => {
                    partner[o] = entry;
                    partner[entry] = o;
                }
            }
        };
        for (c, &letter) in word.iter().enumerate() {
            let i = letter.unsigned_abs() as usize;
            if letter == 0 || i >= strands {
                return Err(Error::InvalidDiagram(format!(
                    "braid letter {letter} out of range for {strands} strands"
                )));
            }
            let j = i - 1;
            let x = 4 * c;
            // (left in, right in, left out, right out)
            let (li, ri, lo, ro) = if letter > 0 {
                (x + 3, x, x + 2, x + 1)
            } else {
                (x, x + 1, x + 3, x + 2)
            };
            hints[li] = Some(true);
            hints[ri] = Some(true);
            attach(j, li, &mut first, &open, &mut partner);
            attach(j + 1, ri, &mut first, &open, &mut partner);
            open[j] = Some(lo);
            open[j + 1] = Some(ro);
        }
        let mut loops = 0;
        for pos in 0..strands {
            match (open[pos], first[pos]) {
                (Some(o), Some(f)) => {
                    partner[o] = f;
                    partner[f] = o;
                }
                _ => loops += 1,
            }
        }
        Self::with_hints(partner, loops, &hints)
    }

    /// Canonical PD rendering; [`parse_pd`] inverts it exactly.
    pub fn to_pd(&self) -> String {
        // arcs are numbered consecutively along each component, so the
        // direction of a strand that only passes over survives
        let mut label = vec![0; self.partner.len()];
        let mut next = 1;
        for trace in self.strand_traces() {
            for &entry in &trace {
                label[entry] = next;
                label[self.partner[entry]] = next;
                next += 1;
            }
        }
        let mut out = String::new();
        for c in 0..self.crossing_count() {
            let labels: Vec<String> = (0..4).map(|l| label[4 * c + l].to_string()).collect();
            out.push_str(&format!("X {}\n", labels.join(" ")));
        }
        for _ in 0..self.loops {
            out.push_str(&format!("V {a} {a} {b} {b}\n", a = next, b = next + 1));
            next += 2;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL_PD: &str = "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n";

    #[test]
    fn trefoil_components_and_signs() {
        let d = parse_pd(TREFOIL_PD).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.components(), 1);
        let o = d.orient();
        assert_eq!(o.len(), 1);
        assert_eq!(d.crossing_signs(&o).unwrap(), (0, 3));
        let right = d.mirror();
        assert_eq!(right.crossing_signs(&right.orient()).unwrap(), (3, 0));
        assert!(d.is_alternating());
        assert!(right.is_alternating());
    }

    #[test]
    fn braid_trefoil_is_right_handed() {
        let d = Diagram::from_braid(2, &[1, 1, 1]).unwrap();
        assert_eq!(d.components(), 1);
        assert_eq!(d.crossing_signs(&d.orient()).unwrap(), (3, 0));
        let h = Diagram::from_braid(2, &[-1, -1]).unwrap();
        assert_eq!(h.components(), 2);
        assert_eq!(h.crossing_signs(&h.orient()).unwrap(), (0, 2));
    }

    #[test]
    fn braid_with_unused_strand_gets_a_loop() {
        let d = Diagram::from_braid(3, &[1]).unwrap();
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.components(), 2);
        assert_eq!(d.connected_pieces(), 2);
    }

    #[test]
    fn unknot_orientation() {
        let u = Diagram::unknot();
        assert_eq!(u.orient().len(), 1);
        assert_eq!(u.crossing_signs(&u.orient()).unwrap(), (0, 0));
        assert_eq!(u.components(), 1);
    }

    #[test]
    fn reversing_one_component_flips_linking_signs() {
        let hopf = Diagram::from_braid(2, &[1, 1]).unwrap();
        let o = Orientation::from_bits(vec![false, true]);
        assert_eq!(hopf.crossing_signs(&o).unwrap(), (0, 2));
        assert!(hopf.crossing_signs(&Orientation::from_bits(vec![true])).is_err());
    }

    #[test]
    fn mirror_and_virtualize_are_involutions() {
        let d = parse_pd(TREFOIL_PD).unwrap();
        assert_eq!(d.mirror().mirror(), d);
        assert_ne!(d.mirror(), d);
        let mut v = d.clone();
        for c in 0..3 {
            v = v.virtualize(c).unwrap().virtualize(c).unwrap();
        }
        assert_eq!(v, d);
        assert!(d.virtualize(3).is_err());
        // virtualization keeps the writhe
        let v0 = d.virtualize(0).unwrap();
        assert_eq!(v0.crossing_signs(&v0.orient()).unwrap(), (0, 3));
        assert_eq!(v0.components(), 1);
        assert!(!v0.is_alternating());
    }

    #[test]
    fn moves_carry_strand_directions() {
        let hopf = Diagram::from_braid(2, &[1, 1]).unwrap();
        assert_eq!(hopf.crossing_signs(&hopf.orient()).unwrap(), (2, 0));
        for c in 0..2 {
            let v = hopf.virtualize(c).unwrap();
            assert_eq!(v.crossing_signs(&v.orient()).unwrap(), (2, 0));
            assert_eq!(parse_pd(&v.to_pd()).unwrap(), v);
            assert!((0..v.crossing_count()).all(|c| v.is_incoming(4 * c)));
        }
        let m = hopf.mirror();
        assert_eq!(m.crossing_signs(&m.orient()).unwrap(), (0, 2));
        let grown = hopf.r2_add(0, 1).unwrap().r1_add(2, Twist::Positive).unwrap();
        let signs = grown.crossing_sign_list(&grown.orient()).unwrap();
        assert_eq!(&signs[..2], &[1, 1]);
    }

    #[test]
    fn reidemeister_moves_grow_crossings() {
        let u = Diagram::unknot();
        let k = u.r1_add(0, Twist::Positive).unwrap();
        assert_eq!(k.crossing_count(), 1);
        assert_eq!(k.free_loops(), 0);
        assert_eq!(k.components(), 1);
        let clasp = u.r2_add(0, 0).unwrap();
        assert_eq!(clasp.crossing_count(), 2);
        assert_eq!(clasp.components(), 1);
        assert_eq!(clasp.connected_pieces(), 1);

        let t = parse_pd(TREFOIL_PD).unwrap();
        for arc in 0..t.arcs().len() {
            let r1 = t.r1_add(arc, Twist::Negative).unwrap();
            assert_eq!((r1.crossing_count(), r1.components()), (4, 1));
            for other in 0..t.arcs().len() {
                let r2 = t.r2_add(arc, other).unwrap();
                assert_eq!((r2.crossing_count(), r2.components()), (5, 1));
            }
        }
        assert!(matches!(t.r1_add(99, Twist::Positive), Err(Error::NoSuchArc(99))));

        let two = Diagram::unlink(2).unwrap();
        let linked = two.r2_add(0, 1).unwrap();
        assert_eq!((linked.crossing_count(), linked.components(), linked.free_loops()), (2, 2, 0));
    }

    #[test]
    fn rejects_bad_matchings() {
        assert!(Diagram::new(vec![1, 0, 3], 0).is_err());
        assert!(Diagram::new(vec![0, 2, 1, 3], 0).is_err());
        assert!(Diagram::new(vec![], 0).is_err());
        assert!(Diagram::new(vec![1, 0, 3, 2], 0).is_ok());
    }

    #[test]
    fn state_vector_masks_length() {
        let s = StateVector::new(0b1011, 3);
        assert_eq!(s.bits(), 0b011);
        assert_eq!(s.r(), 2);
        assert!(s.is_b(1) && !s.is_b(2));
        assert_eq!(StateVector::all_b(5).r(), 5);
    }
}
