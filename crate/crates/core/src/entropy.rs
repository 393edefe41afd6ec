//! Entropy, length and the rectangle-area formula, plus the cross notions
//! between two bundles on the same outcomes.
//!
//! All logarithms are base 2. Floating values are computed from the exact
//! integers (draw counts, fibre sizes, power products) at the last step.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bundle::LabelledBundle;
use crate::error::{Error, Result};
use crate::homs::hom_count_over_base;
use crate::numeric::{log2_big, ratio_f64, to_f64};
use crate::poly::DirPoly;
use crate::rect::{h_map, RectValue};

/// Tolerance used by the theorem checks unless the caller supplies one.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// `-Σ p log2 p` over `(fibre size, multiplicity)` pairs; empty fibres
/// contribute nothing.
fn shannon<'a>(fibres: impl Iterator<Item = (&'a BigUint, f64)>, draws: &BigUint) -> f64 {
    let h: f64 = fibres
        .filter(|(size, _)| !size.is_zero())
        .map(|(size, multiplicity)| {
            let p = ratio_f64(size, draws);
            -multiplicity * p * p.log2()
        })
        .sum();
    // a single non-empty fibre sums to -0.0
    h.max(0.0)
}

/// Shannon entropy, in bits, of the empirical distribution of `b`.
pub fn entropy(b: &LabelledBundle) -> Result<f64> {
    let draws = b.num_draws();
    if draws.is_zero() {
        return Err(Error::NoDraws);
    }
    Ok(shannon(b.sizes().map(|s| (s, 1.0)), &draws))
}

/// Entropy of the distribution carried by `d`, computed term by term.
pub fn poly_entropy(d: &DirPoly) -> Result<f64> {
    let draws = d.num_draws();
    if draws.is_zero() {
        return Err(Error::NoDraws);
    }
    Ok(shannon(
        d.terms().map(|(base, a)| (base, to_f64(a))),
        &draws,
    ))
}

/// Area, width, entropy and length of one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Measures {
    /// `A = |d(1)|`.
    pub area: BigUint,
    /// `P = W^A`.
    pub power_product: BigUint,
    pub width: f64,
    /// Bits.
    pub entropy: f64,
    /// `2^H`, the perplexity.
    pub length: f64,
}

pub fn measures(d: &DirPoly) -> Result<Measures> {
    let rect = h_map(d);
    if rect.area().is_zero() {
        return Err(Error::NoDraws);
    }
    let width = rect.width()?.value;
    let entropy = poly_entropy(d)?;
    let (area, power_product) = rect.into_parts();
    Ok(Measures {
        area,
        power_product,
        width,
        entropy,
        length: entropy.exp2(),
    })
}

/// Outcome of checking `A = L·W` for one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct RectangleAreaReport {
    pub measures: Measures,
    pub tolerance: f64,
    /// `|A - L·W|`.
    pub float_residual: f64,
    pub float_pass: bool,
    /// `|A·H + log2 P - A·log2 A|`, the logarithm of `2^(A·H)·P = A^A`.
    pub log_residual: f64,
    pub log_pass: bool,
}

impl RectangleAreaReport {
    pub fn passed(&self) -> bool {
        self.float_pass && self.log_pass
    }
}

pub fn check_rectangle_area(d: &DirPoly, tol: f64) -> Result<RectangleAreaReport> {
    let m = measures(d)?;
    let area = to_f64(&m.area);
    let float_residual = (area - m.length * m.width).abs();
    let log2_area = log2_big(&m.area);
    let log_residual = if m.power_product.is_zero() {
        f64::INFINITY
    } else {
        (area * m.entropy + log2_big(&m.power_product) - area * log2_area).abs()
    };
    Ok(RectangleAreaReport {
        float_pass: float_residual <= tol * area,
        log_pass: log_residual <= tol * area * log2_area,
        float_residual,
        log_residual,
        tolerance: tol,
        measures: m,
    })
}

/// Cross notions of a data bundle `d` against a model bundle `e`.
///
/// Infinite values are `f64::INFINITY`. They occur exactly when some outcome
/// has draws under `d` but none under `e`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossMeasures {
    /// `H(d,e) = -Σ_i (|d[i]|/|d(1)|) log2(|e[i]|/|e(1)|)`.
    pub cross_entropy: f64,
    /// `A(d,e) = |e(1)|`.
    pub cross_area: BigUint,
    /// `Π_i |e[i]|^|d[i]|`, the number of morphisms `d → e` over the outcomes.
    pub cross_power_product: BigUint,
    /// `W(d,e) = (Π_i |e[i]|^|d[i]|)^(1/|d(1)|)`.
    pub cross_width: f64,
    /// `L(d,e) = 2^H(d,e)`.
    pub cross_length: f64,
    /// `D_KL(p‖q) = H(d,e) - H(d)`.
    pub kl_divergence: f64,
}

impl CrossMeasures {
    pub fn is_degenerate(&self) -> bool {
        self.cross_entropy.is_infinite()
    }
}

pub fn cross_measures(d: &LabelledBundle, e: &LabelledBundle) -> Result<CrossMeasures> {
    let pairs = d.align(e)?;
    let d_draws = d.num_draws();
    let e_draws = e.num_draws();
    if d_draws.is_zero() || e_draws.is_zero() {
        return Err(Error::NoDraws);
    }
    let support = || pairs.iter().filter(|(ds, _)| !ds.is_zero());
    let degenerate = support().any(|(_, es)| es.is_zero());

    let (cross_entropy, kl_divergence) = if degenerate {
        (f64::INFINITY, f64::INFINITY)
    } else {
        let h = support()
            .map(|(ds, es)| -ratio_f64(ds, &d_draws) * ratio_f64(es, &e_draws).log2())
            .sum::<f64>();
        // p/q = (|d[i]|·|e(1)|) / (|e[i]|·|d(1)|), formed exactly
        let kl = support()
            .map(|(ds, es)| {
                let ratio = ratio_f64(&(*ds * &e_draws), &(*es * &d_draws));
                ratio_f64(ds, &d_draws) * ratio.log2()
            })
            .sum::<f64>();
        (h.max(0.0), kl)
    };

    let cross_power_product = hom_count_over_base(d, e)?;
    let cross_width = RectValue::new(d_draws, cross_power_product.clone())
        .width()?
        .value;
    Ok(CrossMeasures {
        cross_entropy,
        cross_area: e_draws,
        cross_power_product,
        cross_width,
        cross_length: cross_entropy.exp2(),
        kl_divergence,
    })
}

/// Kullback-Leibler divergence of the empirical distributions of `d` and `e`.
pub fn kl_divergence(d: &LabelledBundle, e: &LabelledBundle) -> Result<f64> {
    Ok(cross_measures(d, e)?.kl_divergence)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Some outcome has draws under `d` but none under `e`: `L·W` is `∞·0`.
    Degenerate,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Degenerate => "degenerate",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossRectangleAreaReport {
    pub measures: CrossMeasures,
    pub tolerance: f64,
    /// `|A(d,e) - L(d,e)·W(d,e)|`; `None` when degenerate.
    pub residual: Option<f64>,
    pub status: CheckStatus,
}

pub fn check_cross_rectangle_area(
    d: &LabelledBundle,
    e: &LabelledBundle,
    tol: f64,
) -> Result<CrossRectangleAreaReport> {
    let m = cross_measures(d, e)?;
    if m.is_degenerate() {
        return Ok(CrossRectangleAreaReport {
            measures: m,
            tolerance: tol,
            residual: None,
            status: CheckStatus::Degenerate,
        });
    }
    let area = to_f64(&m.cross_area);
    let residual = (area - m.cross_length * m.cross_width).abs();
    let status = if residual <= tol * area {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    Ok(CrossRectangleAreaReport {
        measures: m,
        tolerance: tol,
        residual: Some(residual),
        status,
    })
}
