//! Single-circle states and the spread of their `r` values.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::atom::{build_atom, genus};
use crate::diagram::{Diagram, StateVector};
use crate::error::Result;
use crate::state_sum::{check_limit, extreme_circles, fold_states};

/// States with exactly one circle, with their `r` values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K1Census {
    pub n: usize,
    /// Bitmask of every single-circle state, ascending.
    pub states: Vec<u64>,
    /// `r -> number of states`.
    pub histogram: BTreeMap<u32, u64>,
    /// `(x - 1, n + 1 - y)`.
    pub window: (i64, i64),
    pub chi: i64,
    pub twice_genus: u64,
    pub orientable: bool,
}

/// Outcome of the window, parity and amplitude checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K1Checks {
    pub in_window: bool,
    /// `None` when parity is not expected: non-orientable atoms.
    pub constant_parity: Option<bool>,
    pub amplitude_ok: bool,
}

impl K1Checks {
    pub fn all_pass(&self) -> bool {
        self.in_window && self.constant_parity != Some(false) && self.amplitude_ok
    }
}

/// `(x - 1, n + 1 - y)` with `x`, `y` the all-A and all-B circle counts.
/// Its width is `2 - χ`.
pub fn r_window(d: &Diagram) -> (i64, i64) {
    let (x, y) = extreme_circles(d);
    (x as i64 - 1, d.crossing_count() as i64 + 1 - y as i64)
}

pub fn enumerate_k1(d: &Diagram, limit: usize) -> Result<K1Census> {
    check_limit(d, limit, "single-circle census")?;
    let mut states = fold_states(
        d,
        Vec::new,
        |acc, s, circles| {
            if circles == 1 {
                acc.push(s);
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    states.sort_unstable();
    let mut histogram = BTreeMap::new();
    for s in &states {
        *histogram.entry(s.count_ones()).or_insert(0) += 1;
    }
    let (x, y) = extreme_circles(d);
    let g = genus(&build_atom(d));
    Ok(K1Census {
        n: d.crossing_count(),
        states,
        histogram,
        window: r_window(d),
        chi: x as i64 + y as i64 - d.crossing_count() as i64,
        twice_genus: g.twice_genus,
        orientable: g.orientable,
    })
}

impl K1Census {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, i: usize) -> StateVector {
        StateVector::new(self.states[i], self.n)
    }

    pub fn r_min(&self) -> Option<u32> {
        self.histogram.keys().next().copied()
    }

    pub fn r_max(&self) -> Option<u32> {
        self.histogram.keys().next_back().copied()
    }

    /// `r_max - r_min`, zero for an empty census.
    pub fn amplitude(&self) -> u32 {
        self.r_max().zip(self.r_min()).map_or(0, |(hi, lo)| hi - lo)
    }

    /// Common parity of all `r` values, if they share one.
    pub fn parity(&self) -> Option<u32> {
        let mut ps = self.histogram.keys().map(|r| r % 2);
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    pub fn checks(&self) -> K1Checks {
        let (lo, hi) = self.window;
        let in_window = self.histogram.keys().all(|&r| lo <= r as i64 && r as i64 <= hi);
        // A non-orientable atom admits a crossing whose change keeps one
        // circle, so parity is only a constraint in the orientable case.
        let constant_parity = self.orientable.then(|| self.is_empty() || self.parity().is_some());
        K1Checks {
            in_window,
            constant_parity,
            amplitude_ok: self.is_empty() || self.amplitude() as i64 <= 2 - self.chi,
        }
    }

    /// Diagonals `q - 2t` reachable by a single-circle state: its two
    /// generators sit on `n₊ - r ± 1`.
    pub fn diagonal_support(&self, n_plus: usize) -> BTreeSet<i64> {
        self.histogram
            .keys()
            .flat_map(|&r| {
                let base = n_plus as i64 - r as i64;
                [base - 1, base + 1]
            })
            .collect()
    }
}
