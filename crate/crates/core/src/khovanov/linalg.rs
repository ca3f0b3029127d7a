//! Rank of sparse matrices over GF(2) and over the rationals.
//!
//! Matrices arrive as rows of `(column, coefficient)` pairs with strictly
//! increasing columns.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

pub type SparseRow = Vec<(u32, i64)>;

/// Rank over GF(2), with pivot rows held as packed bit vectors.
pub fn rank_gf2(rows: &[SparseRow], cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; cols];
    let mut rank = 0;
    let mut row = vec![0u64; words];
    for sparse in rows {
        row.fill(0);
        let mut any = false;
        for &(c, v) in sparse {
            if v.rem_euclid(2) == 1 {
                row[c as usize / 64] ^= 1 << (c % 64);
                any = true;
            }
        }
        if !any {
            continue;
        }
        let mut w = 0;
        loop {
            while w < words && row[w] == 0 {
                w += 1;
            }
            if w == words {
                break;
            }
            let lead = w * 64 + row[w].trailing_zeros() as usize;
            match &pivots[lead] {
                Some(p) => {
                    for k in w..words {
                        row[k] ^= p[k];
                    }
                }
                None => {
                    pivots[lead] = Some(row.clone());
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

trait ExactInt: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64> {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64>> ExactInt for T {}

/// `b*x - a*y` on sorted sparse rows; `None` on overflow.
fn combine<T: ExactInt>(x: &[(u32, T)], b: &T, y: &[(u32, T)], a: &T) -> Option<Vec<(u32, T)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, b.checked_mul(&x[i - 1].1)?)
        } else if i == x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, T::zero().checked_sub(&a.checked_mul(&y[j - 1].1)?)?)
        } else {
            i += 1;
            j += 1;
            let l = b.checked_mul(&x[i - 1].1)?;
            (x[i - 1].0, l.checked_sub(&a.checked_mul(&y[j - 1].1)?)?)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

fn primitive<T: ExactInt>(row: &mut [(u32, T)]) {
    let g = row.iter().fold(T::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && g != T::one() {
        for (_, v) in row.iter_mut() {
            *v = v.div_floor(&g);
        }
    }
}

/// Fraction-free echelon elimination; pivots are leading entries.
fn rank_fraction_free<T: ExactInt>(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for sparse in rows {
        let mut row: Vec<(u32, T)> = sparse
            .iter()
            .filter(|(_, v)| *v != 0)
            .map(|&(c, v)| (c, T::from(v)))
            .collect();
        while let Some((lead, a)) = row.first().cloned() {
            let Some(p) = pivots.get(&lead) else {
                primitive(&mut row);
                pivots.insert(lead, row);
                break;
            };
            let b = p[0].1.clone();
            let g = a.gcd(&b);
            row = combine(&row, &b.div_floor(&g), p, &a.div_floor(&g))?;
            primitive(&mut row);
        }
    }
    Some(pivots.len())
}

/// Exact rank over the rationals: machine integers first, big integers if
/// an intermediate entry overflows.
pub fn rank_q(rows: &[SparseRow]) -> usize {
    rank_fraction_free::<i128>(rows)
        .or_else(|| rank_fraction_free::<BigInt>(rows))
        .expect("big-integer elimination cannot overflow")
}
