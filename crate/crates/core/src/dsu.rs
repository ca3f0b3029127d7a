//! Disjoint-set forest with an optional parity label relative to the root.

#[derive(Clone, Debug)]
pub(crate) struct ParityDsu {
    parent: Vec<usize>,
    // parity of each node relative to its parent
    parity: Vec<bool>,
    rank: Vec<u8>,
}

impl ParityDsu {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
        }
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, pp) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= pp;
        (root, self.parity[x])
    }

    /// Records `label(a) xor label(b) == rel`. Returns `false` on contradiction.
    pub fn union(&mut self, a: usize, b: usize, rel: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == rel;
        }
        let (hi, lo) = if self.rank[ra] >= self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[lo] = hi;
        self.parity[lo] = pa ^ pb ^ rel;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        true
    }
}
