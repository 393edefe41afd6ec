//! Rational probability distributions and the bundles realising them.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bundle::LabelledBundle;
use crate::error::{Error, Result};

/// A finitely supported distribution with exact rational probabilities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalDistribution {
    entries: Vec<(String, BigRational)>,
}

impl RationalDistribution {
    /// Validates distinct labels, probabilities in `[0, 1]` and an exact sum of 1.
    pub fn new<I, L>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L, BigRational)>,
        L: Into<String>,
    {
        let entries: Vec<(String, BigRational)> =
            entries.into_iter().map(|(l, p)| (l.into(), p)).collect();
        let mut seen = HashSet::new();
        let mut total = BigRational::zero();
        for (label, p) in &entries {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
            if p.is_negative() || *p > BigRational::one() {
                return Err(Error::InvalidDistribution(format!(
                    "probability {p} of `{label}` is outside [0, 1]"
                )));
            }
            total += p;
        }
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(String, BigRational)] {
        &self.entries
    }

    pub fn probability(&self, label: &str) -> Option<&BigRational> {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, p)| p)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn to_natural(x: &BigInt) -> BigUint {
    debug_assert!(x.sign() != Sign::Minus);
    x.magnitude().clone()
}

/// The smallest bundle realising `p`: the number of draws is the lcm of the
/// reduced denominators, and the fibre over `x` holds `p(x)` times that many.
pub fn from_rational_distribution(p: &RationalDistribution) -> LabelledBundle {
    let draws = p
        .entries
        .iter()
        .fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
    let fibres = p.entries.iter().map(|(label, q)| {
        let size = q.numer() * (&draws / q.denom());
        (label.clone(), to_natural(&size))
    });
    LabelledBundle::new(fibres).expect("labels were validated as distinct")
}

/// The empirical distribution `x ↦ |d[x]| / |d(1)|`, reduced.
pub fn to_distribution(b: &LabelledBundle) -> Result<RationalDistribution> {
    let draws = b.num_draws();
    if draws.is_zero() {
        return Err(Error::NoDraws);
    }
    let draws = BigInt::from(draws);
    Ok(RationalDistribution {
        entries: b
            .fibres()
            .iter()
            .map(|f| {
                (
                    f.label.clone(),
                    BigRational::new(BigInt::from(f.size.clone()), draws.clone()),
                )
            })
            .collect(),
    })
}

fn escape_label(label: &str) -> String {
    let mut out = String::with_capacity(label.len());
    for c in label.chars() {
        if matches!(c, '\\' | ',' | '(' | ')') {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

/// The product bundle: outcomes are pairs `(l1,l2)` in row-major order and
/// fibre sizes multiply. Its polynomial is the product of the factors'.
///
/// `\`, `,`, `(` and `)` inside component labels are backslash-escaped so
/// that distinct pairs always get distinct labels.
pub fn product_bundle(b1: &LabelledBundle, b2: &LabelledBundle) -> LabelledBundle {
    let fibres = b1.fibres().iter().flat_map(|f| {
        b2.fibres().iter().map(move |g| {
            (
                format!("({},{})", escape_label(&f.label), escape_label(&g.label)),
                &f.size * &g.size,
            )
        })
    });
    LabelledBundle::new(fibres).expect("escaped pair labels are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::DirPoly;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn dist(ps: &[(i64, i64)]) -> RationalDistribution {
        RationalDistribution::new(
            ps.iter()
                .enumerate()
                .map(|(i, &(n, d))| (format!("x{}", i + 1), q(n, d))),
        )
        .unwrap()
    }

    fn sizes(b: &LabelledBundle) -> Vec<BigUint> {
        b.sizes().cloned().collect()
    }

    fn nats(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn lcm_construction_examples() {
        let b = from_rational_distribution(&dist(&[(1, 5), (1, 6), (1, 2), (2, 15)]));
        assert_eq!(sizes(&b), nats(&[6, 5, 15, 4]));
        assert_eq!(b.num_draws(), BigUint::from(30u32));
        assert_eq!(
            b.to_poly(),
            DirPoly::from_small_terms([(15, 1), (6, 1), (5, 1), (4, 1)])
        );

        let b = from_rational_distribution(&dist(&[(1, 2), (1, 2)]));
        assert_eq!(sizes(&b), nats(&[1, 1]));
        let b = from_rational_distribution(&dist(&[(1, 3), (2, 3)]));
        assert_eq!(sizes(&b), nats(&[1, 2]));
    }

    #[test]
    fn zero_probabilities_give_empty_fibres() {
        let b = from_rational_distribution(&dist(&[(0, 1), (1, 1)]));
        assert_eq!(sizes(&b), nats(&[0, 1]));
    }

    #[test]
    fn to_distribution_examples() {
        let b = LabelledBundle::from_sizes([6u32, 5, 15, 4]);
        assert_eq!(
            to_distribution(&b).unwrap(),
            dist(&[(1, 5), (1, 6), (1, 2), (2, 15)])
        );
        let b = LabelledBundle::from_sizes([4u32, 1, 1, 1, 1]);
        assert_eq!(
            to_distribution(&b).unwrap(),
            dist(&[(1, 2), (1, 8), (1, 8), (1, 8), (1, 8)])
        );
        let b = LabelledBundle::from_sizes([7u32]);
        assert_eq!(to_distribution(&b).unwrap(), dist(&[(1, 1)]));
        assert_eq!(
            to_distribution(&LabelledBundle::from_sizes([0u32])),
            Err(Error::NoDraws)
        );
    }

    #[test]
    fn invalid_distributions() {
        let err = RationalDistribution::new([("a", q(1, 2)), ("b", q(1, 3))]).unwrap_err();
        assert!(matches!(err, Error::InvalidDistribution(_)));
        let err = RationalDistribution::new([("a", q(3, 2)), ("b", q(-1, 2))]).unwrap_err();
        assert!(matches!(err, Error::InvalidDistribution(_)));
        let err = RationalDistribution::new([("a", q(1, 2)), ("a", q(1, 2))]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("a".into()));
        assert!(RationalDistribution::new(Vec::<(String, BigRational)>::new()).is_err());
    }

    #[test]
    fn product_examples() {
        let b = DirPoly::from_small_terms([(2, 1), (1, 1)])
            .to_bundle()
            .unwrap();
        let prod = product_bundle(&b, &b);
        let mut s = sizes(&prod);
        s.sort();
        assert_eq!(s, nats(&[1, 2, 2, 4]));

        let one = DirPoly::one().to_bundle().unwrap();
        assert_eq!(sizes(&product_bundle(&b, &one)), sizes(&b));

        let left = LabelledBundle::from_sizes([1u32, 2]);
        let right = LabelledBundle::from_sizes([3u32]);
        let prod = product_bundle(&left, &right);
        assert_eq!(sizes(&prod), nats(&[3, 6]));
        assert_eq!(prod.labels().collect::<Vec<_>>(), ["(x1,x1)", "(x2,x1)"]);
    }

    #[test]
    fn product_labels_stay_distinct() {
        let left = LabelledBundle::new([("a,b", 1u32), ("a", 1)]).unwrap();
        let right = LabelledBundle::new([("c", 1u32), ("b,c", 1)]).unwrap();
        let prod = product_bundle(&left, &right);
        assert_eq!(prod.num_outcomes(), 4);
    }
}
