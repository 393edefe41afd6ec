//! Exact arithmetic for Dirichlet polynomials viewed as bundles and as
//! empirical distributions.
//!
//! A Dirichlet polynomial `d(y) = Σ a_n·n^y` is a bundle with `a_n` outcomes
//! carrying `n` draws each. This crate provides the rig operations on such
//! polynomials, the rig morphism `h` into the rectangle rig (area and width),
//! Shannon entropy and length, hom-set counts, cross entropy and KL
//! divergence, and checks of the identities `A = L·W` and
//! `A(d,e) = L(d,e)·W(d,e)`.
//!
//! ```
//! use dirpoly::{measures, parse};
//!
//! let d = parse("4^y + 4").unwrap();
//! let m = measures(&d).unwrap();
//! assert_eq!(m.area, 8u32.into());
//! assert_eq!(m.width, 2.0);
//! assert_eq!(m.entropy, 2.0);
//! assert_eq!(m.length, 4.0);
//! ```

mod bundle;
mod distribution;
mod entropy;
mod error;
mod homs;
mod numeric;
mod parse;
mod poly;
mod rect;

pub use bundle::{Fibre, LabelledBundle};
pub use distribution::{
    from_rational_distribution, product_bundle, to_distribution, RationalDistribution,
};
pub use entropy::{
    check_cross_rectangle_area, check_rectangle_area, cross_measures, entropy, kl_divergence,
    measures, poly_entropy, CheckStatus, CrossMeasures, CrossRectangleAreaReport, Measures,
    RectangleAreaReport, DEFAULT_TOLERANCE,
};
pub use error::{Error, Result};
pub use homs::{
    bundle_morphisms, enumerate_bundle_morphisms, hom_count, hom_count_over_base, BundleMorphism,
    BundleMorphisms, ENUMERATION_LIMIT,
};
pub use parse::{parse, print, ParseError, ParseErrorKind};
pub use poly::DirPoly;
pub use rect::{h_map, RectValue, WidthApprox};

pub use num_bigint::BigUint;
pub use num_rational::BigRational;
