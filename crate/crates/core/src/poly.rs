//! Dirichlet polynomials `a_n·n^y + ... + a_1·1^y + a_0·0^y` with natural
//! coefficients, and their rig operations.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

/// A Dirichlet polynomial in canonical form.
///
/// Maps each base `n` to its coefficient `a_n`. Coefficients are never zero;
/// base `0` is an ordinary term (`0^y` is not the zero polynomial).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DirPoly {
    terms: BTreeMap<BigUint, BigUint>,
}

impl DirPoly {
    /// The additive unit.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The multiplicative unit `1^y`.
    pub fn one() -> Self {
        Self::exponential(1u32)
    }

    /// `n^y`.
    pub fn exponential(base: impl Into<BigUint>) -> Self {
        Self::term(1u32, base)
    }

    /// The natural number `a`, embedded as `a·1^y`.
    pub fn constant(a: impl Into<BigUint>) -> Self {
        Self::term(a, 1u32)
    }

    /// `coefficient·base^y`.
    pub fn term(coefficient: impl Into<BigUint>, base: impl Into<BigUint>) -> Self {
        Self::from_terms([(base.into(), coefficient.into())])
    }

    /// Builds a polynomial from `(base, coefficient)` pairs, merging repeated
    /// bases and dropping zero coefficients.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigUint, BigUint)>,
    {
        let mut out = BTreeMap::new();
        for (base, coefficient) in terms {
            if coefficient.is_zero() {
                continue;
            }
            *out.entry(base).or_insert_with(BigUint::zero) += coefficient;
        }
        Self { terms: out }
    }

    /// Convenience for small literals: `(base, coefficient)` pairs.
    pub fn from_small_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(b, a)| (BigUint::from(b), BigUint::from(a))),
        )
    }

    /// `(base, coefficient)` pairs in ascending base order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&BigUint, &BigUint)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, base: &BigUint) -> BigUint {
        self.terms.get(base).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct bases.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `|d(n)| = Σ a_j·j^n`, with `0^0 = 1`.
    pub fn eval(&self, n: u64) -> BigUint {
        self.terms
            .iter()
            .map(|(base, coefficient)| coefficient * Pow::pow(base, n))
            .sum()
    }

    /// `|d(0)| = Σ a_j`, the number of outcomes.
    pub fn num_outcomes(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// `|d(1)| = Σ a_j·j`, the number of draws.
    pub fn num_draws(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(base, coefficient)| base * coefficient)
            .sum()
    }

    /// `(|d(0)|, |d(1)|)`.
    pub fn cardinalities(&self) -> (BigUint, BigUint) {
        (self.num_outcomes(), self.num_draws())
    }

    /// `a·d`.
    pub fn scale(&self, a: &BigUint) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(base, coefficient)| (base.clone(), coefficient * a))
                .collect(),
        }
    }
}

impl Add for &DirPoly {
    type Output = DirPoly;

    fn add(self, rhs: &DirPoly) -> DirPoly {
        let mut terms = self.terms.clone();
        for (base, coefficient) in &rhs.terms {
            *terms.entry(base.clone()).or_insert_with(BigUint::zero) += coefficient;
        }
        DirPoly { terms }
    }
}

impl Mul for &DirPoly {
    type Output = DirPoly;

    /// Distributive expansion using `m^y·n^y = (mn)^y`.
    fn mul(self, rhs: &DirPoly) -> DirPoly {
        DirPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|(m, a)| rhs.terms.iter().map(move |(n, b)| (m * n, a * b))),
        )
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for DirPoly {
            type Output = DirPoly;
            fn $method(self, rhs: DirPoly) -> DirPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&DirPoly> for DirPoly {
            type Output = DirPoly;
            fn $method(self, rhs: &DirPoly) -> DirPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Mul, mul);

impl std::iter::Sum for DirPoly {
    fn sum<I: Iterator<Item = DirPoly>>(iter: I) -> Self {
        iter.fold(DirPoly::zero(), |acc, d| acc + d)
    }
}

impl std::iter::Product for DirPoly {
    fn product<I: Iterator<Item = DirPoly>>(iter: I) -> Self {
        iter.fold(DirPoly::one(), |acc, d| acc * d)
    }
}

impl Zero for DirPoly {
    fn zero() -> Self {
        DirPoly::zero()
    }
    fn is_zero(&self) -> bool {
        DirPoly::is_zero(self)
    }
}

impl One for DirPoly {
    fn one() -> Self {
        DirPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u64, u64)]) -> DirPoly {
        DirPoly::from_small_terms(terms.iter().copied())
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn canonical_form_drops_zero_coefficients_and_keeps_base_zero() {
        let d = p(&[(2, 0), (0, 3), (1, 0)]);
        assert_eq!(d, p(&[(0, 3)]));
        assert!(!d.is_zero());
        assert!(p(&[(5, 0)]).is_zero());
    }

    #[test]
    fn add_examples() {
        // (3·2^y + 1) + (4^y + 2^y + 3·0^y)
        let d = p(&[(2, 3), (1, 1)]);
        let e = p(&[(4, 1), (2, 1), (0, 3)]);
        assert_eq!(&d + &e, p(&[(4, 1), (2, 4), (1, 1), (0, 3)]));
        assert_eq!(&d + &DirPoly::zero(), d);
        assert_eq!(
            DirPoly::exponential(2u32) + DirPoly::exponential(2u32),
            p(&[(2, 2)])
        );
    }

    #[test]
    fn mul_examples() {
        let d = p(&[(2, 3), (1, 1)]);
        let e = p(&[(4, 1), (2, 1), (0, 3)]);
        assert_eq!(&d * &e, p(&[(8, 3), (4, 4), (2, 1), (0, 12)]));
        let f = p(&[(2, 1), (1, 1)]);
        assert_eq!(&f * &f, p(&[(4, 1), (2, 2), (1, 1)]));
        assert_eq!(&d * &DirPoly::one(), d);
    }

    #[test]
    fn mul_by_zero_exponential_counts_outcomes() {
        let d = p(&[(4, 1), (1, 4)]);
        assert_eq!(&d * &DirPoly::exponential(0u32), p(&[(0, 5)]));
    }

    #[test]
    fn eval_examples() {
        let d = p(&[(4, 1), (1, 4)]);
        assert_eq!(d.eval(0), big(5));
        assert_eq!(d.eval(1), big(8));
        assert_eq!(d.eval(2), big(20));
        // 0^0 = 1, 0^n = 0
        assert_eq!(p(&[(0, 3)]).eval(0), big(3));
        assert_eq!(p(&[(0, 3)]).eval(2), big(0));
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(p(&[(4, 1), (1, 4)]).cardinalities(), (big(5), big(8)));
        assert_eq!(DirPoly::zero().cardinalities(), (big(0), big(0)));
        assert_eq!(
            p(&[(15, 1), (6, 1), (5, 1), (4, 1)]).cardinalities(),
            (big(4), big(30))
        );
    }

    #[test]
    fn scale_by_zero_is_zero() {
        assert!(p(&[(3, 2)]).scale(&big(0)).is_zero());
        assert_eq!(p(&[(3, 2)]).scale(&big(4)), p(&[(3, 8)]));
    }
}
