#![allow(dead_code)]

use std::path::PathBuf;

use kmc_core::{kauffman_bracket, Diagram, KhChainComplex, LaurentPoly};

pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// The graded Euler characteristic predicted by the bracket: substitute
/// `A^e -> (-1)^k q^{-k}` with `k = (e - n)/2`, multiply by the unknot's
/// `q + q⁻¹` and by the normalization `(-1)^{n₋} q^{n₊ - 2n₋}`.
pub fn euler_from_bracket(d: &Diagram) -> LaurentPoly {
    let n = d.crossing_count() as i32;
    let (n_plus, n_minus) = d.crossing_signs(&d.orient()).unwrap();
    let mut out = LaurentPoly::zero();
    for (e, c) in kauffman_bracket(d).terms() {
        assert_eq!((e - n).rem_euclid(2), 0);
        let k = (e - n) / 2;
        out.add_term(if k.rem_euclid(2) == 0 { c } else { -c }, -k);
    }
    let out = (&out * &LaurentPoly::from_terms([(1, 1), (-1, 1)])).shift(n_plus as i32 - 2 * n_minus as i32);
    if n_minus % 2 == 0 { out } else { -&out }
}

pub fn reduce_mod2(p: &LaurentPoly) -> Vec<i32> {
    p.terms().filter(|(_, c)| c.rem_euclid(2) == 1).map(|(e, _)| e).collect()
}

/// Composes consecutive differentials densely and checks every entry is
/// zero (mod 2 when `mod2`).
pub fn square_is_zero(c: &KhChainComplex, mod2: bool) -> bool {
    let grades: Vec<(i64, i64)> = c.bigradings().collect();
    for (t, q) in grades {
        let first = c.differential(t, q);
        let second = c.differential(t + 1, q);
        if second.is_empty() {
            continue;
        }
        let width = c.block(t + 2, q).len();
        for row in first {
            let mut acc = vec![0i64; width];
            for &(j, a) in row {
                for &(k, b) in &second[j as usize] {
                    acc[k as usize] += a * b;
                }
            }
            if acc.iter().any(|&v| if mod2 { v % 2 != 0 } else { v != 0 }) {
                return false;
            }
        }
    }
    true
}
