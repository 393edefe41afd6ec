//! Big-integer helpers shared by the exact and floating code paths.

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};

/// `base^exp` over the naturals with `0^0 = 1`.
///
/// Panics if `base >= 2` and `exp` does not fit in a `u64`: the result
/// would need more than 2^64 bits.
pub(crate) fn pow_big(base: &BigUint, exp: &BigUint) -> BigUint {
    if exp.is_zero() || base.is_one() {
        return BigUint::one();
    }
    if base.is_zero() {
        return BigUint::zero();
    }
    let exp = exp
        .to_u64()
        .expect("power does not fit in addressable memory");
    Pow::pow(base, exp)
}

/// Keeps the top 64 significant bits of `x`; returns them with the shift applied.
fn top_bits(x: &BigUint) -> (f64, u64) {
    let shift = x.bits().saturating_sub(64);
    let top = (x >> shift).to_u64().expect("at most 64 bits remain");
    (top as f64, shift)
}

/// `log2(x)` for `x > 0`, accurate to a few ulps at any magnitude.
pub(crate) fn log2_big(x: &BigUint) -> f64 {
    debug_assert!(!x.is_zero());
    let (top, shift) = top_bits(x);
    top.log2() + shift as f64
}

/// `num / den` rounded to `f64`, without overflowing for huge operands.
pub(crate) fn ratio_f64(num: &BigUint, den: &BigUint) -> f64 {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return 0.0;
    }
    let shift = num.bits().max(den.bits()).saturating_sub(64);
    let n = (num >> shift).to_f64().unwrap_or(0.0);
    let d = (den >> shift).to_f64().unwrap_or(0.0);
    if d == 0.0 {
        // den is many orders of magnitude below num
        return f64::INFINITY;
    }
    if n == 0.0 {
        // num vanished under the shift: fall back to logarithms
        return (log2_big(num) - log2_big(den)).exp2();
    }
    n / d
}

/// `x` as `f64`, saturating to infinity above `f64::MAX`.
pub(crate) fn to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(pow_big(&big(0), &big(0)), big(1));
        assert_eq!(pow_big(&big(0), &big(3)), big(0));
        assert_eq!(pow_big(&big(7), &big(0)), big(1));
        assert_eq!(pow_big(&big(4), &big(4)), big(256));
    }

    #[test]
    fn trivial_bases_ignore_huge_exponents() {
        let huge = BigUint::from(u64::MAX) * big(1000);
        assert_eq!(pow_big(&big(1), &huge), big(1));
        assert_eq!(pow_big(&big(0), &huge), big(0));
    }

    #[test]
    fn log2_of_large_powers_of_two() {
        assert_eq!(log2_big(&big(256)), 8.0);
        let x = BigUint::one() << 1000u32;
        assert_eq!(log2_big(&x), 1000.0);
        let y = Pow::pow(&big(3), 500u32);
        let expected = 500.0 * 3f64.log2();
        assert!((log2_big(&y) - expected).abs() < 1e-12 * expected);
    }

    #[test]
    fn ratio_of_huge_operands() {
        let a = BigUint::one() << 3000u32;
        let b = &a * big(4);
        assert_eq!(ratio_f64(&a, &b), 0.25);
        assert_eq!(ratio_f64(&big(1), &big(3)), 1.0 / 3.0);
        assert_eq!(ratio_f64(&big(0), &big(3)), 0.0);
    }
}
