//! Integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial with integer coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coef: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(coef, exp);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, i64)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, coef: i64, exp: i32) {
        if coef == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coef;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coef(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Leading degree minus lowest degree; `None` for the zero polynomial.
    pub fn span(&self) -> Option<i32> {
        Some(self.max_degree()? - self.min_degree()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `x ↦ x^factor`.
    pub fn rescale(&self, factor: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * factor, c)))
    }

    /// Substitutes `x ↦ x⁻¹`.
    pub fn invert_variable(&self) -> Self {
        self.rescale(-1)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + k, c)))
    }

    /// Renders with an explicit variable name, e.g. `-1*A^-4 + 1*A^4`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                out.push_str(if c < 0 { " - " } else { " + " });
            } else if c < 0 {
                out.push('-');
            }
            out.push_str(&format!("{}*{var}^{e}", c.abs()));
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(c, e);
        }
        p
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(-c, e);
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                p.add_term(c1 * c2, e1 + e2);
            }
        }
        p
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d() -> LaurentPoly {
        LaurentPoly::from_terms([(2, -1), (-2, -1)])
    }

    #[test]
    fn zero_has_no_span() {
        assert_eq!(LaurentPoly::zero().span(), None);
        assert_eq!(LaurentPoly::one().span(), Some(0));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &d() - &d();
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn loop_value_squared() {
        // (-A^2 - A^-2)^2 = A^4 + 2 + A^-4
        let p = d().pow(2);
        assert_eq!(p, LaurentPoly::from_terms([(4, 1), (0, 2), (-4, 1)]));
        assert_eq!(p.span(), Some(8));
    }

    #[test]
    fn display() {
        assert_eq!(d().display_with("A"), "-1*A^-2 - 1*A^2");
        assert_eq!(LaurentPoly::zero().display_with("A"), "0");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i32..6, -5i64..5), 0..5).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn invert_is_multiplicative(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!((&p * &q).invert_variable(), &p.invert_variable() * &q.invert_variable());
            prop_assert_eq!(p.invert_variable().invert_variable(), p);
        }

        #[test]
        fn span_is_additive_under_products(p in arb_poly(), q in arb_poly()) {
            let prod = &p * &q;
            if let (Some(a), Some(b)) = (p.span(), q.span()) {
                prop_assert_eq!(prod.span(), Some(a + b));
            }
        }
    }
}
