//! The rectangle rig and the rig morphism `h: Dir → Rect`.
//!
//! An element `(A, W)` of the rectangle rig has an area `A` and a width `W`.
//! Multiplication is componentwise. Addition adds areas and takes the
//! area-weighted geometric mean of widths:
//!
//! ```text
//! (A1, W1) + (A2, W2) = (A1 + A2, (W1^A1 · W2^A2)^(1 / (A1 + A2)))
//! ```
//!
//! [`RectValue`] stores `(A, P)` with `P = W^A` instead of `(A, W)`. On that
//! representation addition is `(A1 + A2, P1·P2)` and multiplication is
//! `(A1·A2, P1^A2 · P2^A1)`, so every image of `h` and every rig combination
//! of images is computed exactly over the naturals. The width is recovered as
//! `P^(1/A)` only when a float is asked for.
//!
//! All elements of area zero are identified with `(0, P = 1)`. The width of a
//! zero-area element never influences a sum or product of positive area, so
//! this quotient is compatible with both operations.

use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{log2_big, pow_big, to_f64};
use crate::poly::DirPoly;

/// An element of the rectangle rig, stored as area `A` and power product `P = W^A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RectValue {
    area: BigUint,
    power_product: BigUint,
}

/// A floating view of a width together with a bound on its relative error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WidthApprox {
    pub value: f64,
    pub relative_error_bound: f64,
}

impl RectValue {
    /// `(A, P)`; when `A = 0` the power product is normalised to 1.
    pub fn new(area: impl Into<BigUint>, power_product: impl Into<BigUint>) -> Self {
        let area = area.into();
        let power_product = if area.is_zero() {
            BigUint::one()
        } else {
            power_product.into()
        };
        Self {
            area,
            power_product,
        }
    }

    /// The additive unit.
    pub fn zero() -> Self {
        Self::new(0u32, 1u32)
    }

    /// The multiplicative unit `(1, 1)`.
    pub fn one() -> Self {
        Self::new(1u32, 1u32)
    }

    /// `h(n^y) = (n, n)`, i.e. `P = n^n`.
    pub fn exponential(n: &BigUint) -> Self {
        Self::new(n.clone(), pow_big(n, n))
    }

    pub fn area(&self) -> &BigUint {
        &self.area
    }

    /// `P = W^A`.
    pub fn power_product(&self) -> &BigUint {
        &self.power_product
    }

    pub fn into_parts(self) -> (BigUint, BigUint) {
        (self.area, self.power_product)
    }

    /// `a·r`, the sum of `a` copies: `(a·A, P^a)`. Widths are unchanged.
    pub fn scale(&self, a: &BigUint) -> Self {
        Self::new(&self.area * a, pow_big(&self.power_product, a))
    }

    /// `W = P^(1/A)` as a float, with a relative error bound.
    pub fn width(&self) -> Result<WidthApprox> {
        if self.area.is_zero() {
            return Err(Error::ZeroArea);
        }
        if self.power_product.is_zero() {
            return Ok(WidthApprox {
                value: 0.0,
                relative_error_bound: 0.0,
            });
        }
        let log2_width = log2_big(&self.power_product) / to_f64(&self.area);
        let value = log2_width.exp2();
        // log2 of the power product carries a few ulps relative to its own
        // magnitude; dividing by A keeps that relative to |log2 W|, and
        // exp2 turns an absolute log error into ln 2 times a relative one.
        let eps = f64::EPSILON;
        let relative_error_bound = 4.0 * eps * (log2_width.abs() + 64.0 / to_f64(&self.area) + 1.0);
        Ok(WidthApprox {
            value,
            relative_error_bound,
        })
    }
}

impl Add for &RectValue {
    type Output = RectValue;

    fn add(self, rhs: &RectValue) -> RectValue {
        RectValue::new(
            &self.area + &rhs.area,
            &self.power_product * &rhs.power_product,
        )
    }
}

impl Mul for &RectValue {
    type Output = RectValue;

    /// `(W1·W2)^(A1·A2) = P1^A2 · P2^A1`.
    fn mul(self, rhs: &RectValue) -> RectValue {
        RectValue::new(
            &self.area * &rhs.area,
            pow_big(&self.power_product, &rhs.area) * pow_big(&rhs.power_product, &self.area),
        )
    }
}

impl Add for RectValue {
    type Output = RectValue;
    fn add(self, rhs: RectValue) -> RectValue {
        &self + &rhs
    }
}

impl Mul for RectValue {
    type Output = RectValue;
    fn mul(self, rhs: RectValue) -> RectValue {
        &self * &rhs
    }
}

/// The unique rig morphism with `n^y ↦ (n, n)`.
///
/// Each term `a·n^y` maps to `a·h(n^y) = (a·n, n^(a·n))`; the terms are then
/// summed in the rectangle rig. Equivalently `A = |d(1)|` and
/// `P = Π_i |d[i]|^|d[i]|` over the fibres of `d`.
///
/// # Panics
///
/// If `P` is too large to hold in memory (a base or draw count beyond `u64`).
pub fn h_map(d: &DirPoly) -> RectValue {
    d.terms()
        .map(|(base, coefficient)| RectValue::exponential(base).scale(coefficient))
        .fold(RectValue::zero(), |acc, r| acc + r)
}
