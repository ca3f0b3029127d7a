//! Kauffman bracket by exhaustive state sum.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{corner, Diagram, StateVector};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Default cap on `n` for anything that walks all `2ⁿ` states.
pub const DEFAULT_STATE_LIMIT: usize = 24;

pub(crate) fn check_limit(d: &Diagram, limit: usize, what: &'static str) -> Result<()> {
    let n = d.crossing_count();
    if n > limit || n >= StateVector::MAX_LEN {
        return Err(Error::LimitExceeded { what, n, limit: limit.min(StateVector::MAX_LEN - 1) });
    }
    Ok(())
}

/// Circles of one state: the circle index of every port, plus the total
/// count (crossing-free loops included, numbered after the traced circles).
/// Circles are numbered by their lowest port.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateCircles {
    pub circle_of_port: Vec<u32>,
    pub count: usize,
}

pub fn trace_circles(d: &Diagram, state: u64) -> StateCircles {
    let ports = d.port_count();
    let mut circle_of_port = vec![u32::MAX; ports];
    let mut count = 0u32;
    for start in 0..ports {
        if circle_of_port[start] != u32::MAX {
            continue;
        }
        let mut p = start;
        loop {
            circle_of_port[p] = count;
            let q = d.partner(p);
            circle_of_port[q] = count;
            p = corner(q, state >> (q / 4) & 1 == 1);
            if p == start {
                break;
            }
        }
        count += 1;
    }
    StateCircles { circle_of_port, count: count as usize + d.free_loops() }
}

fn count_circles(d: &Diagram, state: u64, seen: &mut [bool]) -> usize {
    seen.fill(false);
    let mut count = d.free_loops();
    for start in 0..seen.len() {
        if seen[start] {
            continue;
        }
        let mut p = start;
        loop {
            seen[p] = true;
            let q = d.partner(p);
            seen[q] = true;
            p = corner(q, state >> (q / 4) & 1 == 1);
            if p == start {
                break;
            }
        }
        count += 1;
    }
    count
}

/// Number of closed curves after smoothing every crossing according to `s`.
pub fn circles_of_state(d: &Diagram, s: &StateVector) -> usize {
    assert_eq!(s.len(), d.crossing_count(), "state length must equal the crossing count");
    count_circles(d, s.bits(), &mut vec![false; d.port_count()])
}

/// `|s|` and `r(s)` for one state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateSummary {
    pub state: StateVector,
    pub circles: usize,
    pub r: u32,
}

impl StateSummary {
    pub fn of(d: &Diagram, state: StateVector) -> Self {
        Self { state, circles: circles_of_state(d, &state), r: state.r() }
    }
}

/// Visits every state in parallel chunks and folds per-chunk accumulators.
pub(crate) fn fold_states<T, F, M>(d: &Diagram, init: impl Fn() -> T + Sync + Send, visit: F, merge: M) -> T
where
    T: Send,
    F: Fn(&mut T, u64, usize) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let n = d.crossing_count();
    assert!(n < StateVector::MAX_LEN);
    let total: u64 = 1 << n;
    let chunk: u64 = 1 << 12;
    let chunks = total.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut acc = init();
            let mut seen = vec![false; d.port_count()];
            for s in k * chunk..((k + 1) * chunk).min(total) {
                let c = count_circles(d, s, &mut seen);
                visit(&mut acc, s, c);
            }
            acc
        })
        .reduce(&init, merge)
}

/// Number of states with each `(r, circles)` pair, indexed `[r][circles]`.
pub fn state_census(d: &Diagram) -> Vec<Vec<u64>> {
    let n = d.crossing_count();
    let width = 2 * n + d.free_loops() + 1;
    fold_states(
        d,
        || vec![vec![0u64; width]; n + 1],
        |acc, s, c| acc[s.count_ones() as usize][c] += 1,
        |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        },
    )
}

/// The loop value `-A² - A⁻²`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// `⟨L⟩ = Σ_s A^{#A - #B} (-A² - A⁻²)^{|s|-1}`, normalized so the
/// crossing-free circle is 1. Walks all `2ⁿ` states.
pub fn kauffman_bracket(d: &Diagram) -> LaurentPoly {
    let n = d.crossing_count() as i32;
    let census = state_census(d);
    let delta = loop_value();
    let mut powers = vec![LaurentPoly::one()];
    let mut out = LaurentPoly::zero();
    for (r, row) in census.iter().enumerate() {
        for (c, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            while powers.len() < c {
                let next = powers.last().unwrap() * &delta;
                powers.push(next);
            }
            let term = powers[c - 1].shift(n - 2 * r as i32);
            out = &out + &LaurentPoly::from_terms(term.terms().map(|(e, k)| (e, k * count as i64)));
        }
    }
    out
}

/// Bracket limited to `limit` crossings.
pub fn kauffman_bracket_limited(d: &Diagram, limit: usize) -> Result<LaurentPoly> {
    check_limit(d, limit, "state sum")?;
    Ok(kauffman_bracket(d))
}

/// `(-A³)^{-w} ⟨L⟩`, the writhe-corrected bracket.
pub fn writhe_normalized_bracket(d: &Diagram, o: &crate::diagram::Orientation) -> Result<LaurentPoly> {
    let w = d.writhe(o)?;
    let b = kauffman_bracket(d).shift(-3 * w as i32);
    Ok(if w % 2 == 0 { b } else { -&b })
}

/// Upper bound `4n + 2(χ - 2)` on the bracket span.
pub fn span_bound(n: usize, chi: i64) -> i64 {
    4 * n as i64 + 2 * (chi - 2)
}

/// Circle counts of the all-A and all-B states.
pub fn extreme_circles(d: &Diagram) -> (usize, usize) {
    let n = d.crossing_count();
    (
        circles_of_state(d, &StateVector::all_a(n)),
        circles_of_state(d, &StateVector::all_b(n)),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneCompleteness {
    pub strict: bool,
    /// `None` when the bracket vanishes.
    pub span: Option<i64>,
    pub bound: i64,
}

/// Strict first completeness: the bracket span attains `4n + 2(χ - 2)`.
pub fn is_1_complete(d: &Diagram) -> OneCompleteness {
    let (a, b) = extreme_circles(d);
    let chi = a as i64 + b as i64 - d.crossing_count() as i64;
    let bound = span_bound(d.crossing_count(), chi);
    let span = kauffman_bracket(d).span().map(i64::from);
    OneCompleteness { strict: span == Some(bound), span, bound }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_gauss, parse_pd, Twist};

    fn trefoil() -> Diagram {
        parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3").unwrap()
    }

    /// Independent circle count: union-find over ports, one union per arc
    /// and one per smoothing corner.
    fn circles_by_union_find(d: &Diagram, s: u64) -> usize {
        let m = d.port_count();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let unite = |a: usize, b: usize, parent: &mut Vec<usize>| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            parent[ra] = rb;
        };
        for p in 0..m {
            unite(p, d.partner(p), &mut parent);
            let c = p / 4;
            let l = p % 4;
            let b = s >> c & 1 == 1;
            // A joins (0,1),(2,3); B joins (1,2),(3,0)
            let q = if b { [3, 2, 1, 0][l] } else { [1, 0, 3, 2][l] };
            unite(p, 4 * c + q, &mut parent);
        }
        (0..m).filter(|&x| find(&mut parent, x) == x).count() + d.free_loops()
    }

    #[test]
    fn unknot_bracket_is_one() {
        let u = Diagram::unknot();
        assert_eq!(circles_of_state(&u, &StateVector::all_a(0)), 1);
        assert_eq!(kauffman_bracket(&u), LaurentPoly::one());
        let c = is_1_complete(&u);
        assert!(c.strict);
        assert_eq!((c.span, c.bound), (Some(0), 0));
    }

    #[test]
    fn kinks() {
        let u = Diagram::unknot();
        let pos = u.r1_add(0, Twist::Positive).unwrap();
        let neg = u.r1_add(0, Twist::Negative).unwrap();
        assert_eq!(kauffman_bracket(&pos), LaurentPoly::monomial(-1, 3));
        assert_eq!(kauffman_bracket(&neg), LaurentPoly::monomial(-1, -3));
    }

    #[test]
    fn trefoil_state_sum() {
        let t = trefoil();
        // left-handed: top degree n + 2(a - 1) = 7 needs three A-circles
        assert_eq!(extreme_circles(&t), (3, 2));
        let b = kauffman_bracket(&t);
        assert_eq!(b, LaurentPoly::from_terms([(7, 1), (3, -1), (-5, -1)]));
        assert_eq!(b.span(), Some(12));
        assert_eq!(span_bound(3, 2), 12);
        assert!(is_1_complete(&t).strict);
        // mirror
        assert_eq!(kauffman_bracket(&t.mirror()), b.invert_variable());
    }

    #[test]
    fn kinked_trefoil_is_not_1_complete() {
        let k = trefoil().r1_add(0, Twist::Positive).unwrap();
        let c = is_1_complete(&k);
        assert_eq!(c.span, Some(12));
        assert_eq!(c.bound, 16);
        assert!(!c.strict);
    }

    #[test]
    fn virtual_trefoil_extremes() {
        let v = parse_gauss("O1+ O2+ U1+ U2+").unwrap();
        let (a, b) = extreme_circles(&v);
        assert_eq!(a as i64 + b as i64 - 2, 1);
    }

    #[test]
    fn span_bound_values() {
        assert_eq!(span_bound(13, -2), 44);
        assert_eq!(span_bound(0, 2), 0);
        assert_eq!(span_bound(3, 2), 12);
    }

    #[test]
    fn tracing_matches_union_find() {
        let g = parse_gauss("O1- U2+ O3+ U1- O2+ U4- O4- U3+").unwrap();
        for s in 0..16u64 {
            assert_eq!(count_circles(&g, s, &mut [false; 16]), circles_by_union_find(&g, s));
            assert_eq!(trace_circles(&g, s).count, circles_by_union_find(&g, s));
        }
    }

    #[test]
    fn limit_is_enforced() {
        let t = trefoil();
        assert!(kauffman_bracket_limited(&t, 3).is_ok());
        assert!(matches!(kauffman_bracket_limited(&t, 2), Err(Error::LimitExceeded { n: 3, .. })));
    }

    #[test]
    fn writhe_normalized_trefoil() {
        // V = -t^-4 + t^-3 + t^-1 for the left trefoil, at A = t^(-1/4)
        let t = trefoil();
        let f = writhe_normalized_bracket(&t, &t.orient()).unwrap();
        assert_eq!(f, LaurentPoly::from_terms([(16, -1), (12, 1), (4, 1)]));
    }
}
