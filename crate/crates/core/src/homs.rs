//! Hom-set cardinalities between Dirichlet polynomials and bundles.
//!
//! A morphism of bundles `d → e` is a map on outcomes `d(0) → e(0)` together
//! with a map on draws `d(1) → e(1)` that sends every draw of `d[i]` into the
//! fibre over the image of `i`. An empty fibre admits exactly one map into any
//! fibre, which is why every count below uses `0^0 = 1`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::bundle::LabelledBundle;
use crate::error::{Error, Result};
use crate::numeric::pow_big;
use crate::poly::DirPoly;

/// Largest number of draws, and of outcomes, per side that
/// [`enumerate_bundle_morphisms`] accepts.
pub const ENUMERATION_LIMIT: usize = 8;

/// `|Dir(d, e)| = Π_{i ∈ d(0)} Σ_{j ∈ e(0)} |e[j]|^|d[i]|`.
pub fn hom_count(d: &DirPoly, e: &DirPoly) -> BigUint {
    let mut total = BigUint::from(1u32);
    for (size, multiplicity) in d.terms() {
        let choices: BigUint = e
            .terms()
            .map(|(target, count)| count * pow_big(target, size))
            .sum();
        total *= pow_big(&choices, multiplicity);
    }
    total
}

/// Morphisms over the identity on outcomes: `Π_i |e[i]|^|d[i]|`.
pub fn hom_count_over_base(d: &LabelledBundle, e: &LabelledBundle) -> Result<BigUint> {
    Ok(d.align(e)?
        .into_iter()
        .map(|(source, target)| pow_big(target, source))
        .product())
}

/// A commuting square between two bundles, by fibre position.
///
/// `base_map[i]` is the target outcome of source outcome `i`;
/// `total_map[i][k]` is the index, within fibre `base_map[i]` of the target,
/// of the image of the `k`-th draw over source outcome `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleMorphism {
    pub base_map: Vec<usize>,
    pub total_map: Vec<Vec<usize>>,
}

impl BundleMorphism {
    /// `(source label, target label)` for each source outcome.
    pub fn base_labels<'a>(
        &self,
        source: &'a LabelledBundle,
        target: &'a LabelledBundle,
    ) -> Vec<(&'a str, &'a str)> {
        source
            .fibres()
            .iter()
            .zip(&self.base_map)
            .map(|(f, &j)| (f.label.as_str(), target.fibres()[j].label.as_str()))
            .collect()
    }

    /// Whether every draw lands in the fibre over its mapped outcome.
    pub fn commutes(&self, source: &LabelledBundle, target: &LabelledBundle) -> bool {
        let src = source.fibres();
        let tgt = target.fibres();
        self.base_map.len() == src.len()
            && self.total_map.len() == src.len()
            && src.iter().enumerate().all(|(i, fibre)| {
                let j = self.base_map[i];
                j < tgt.len()
                    && BigUint::from(self.total_map[i].len()) == fibre.size
                    && self.total_map[i]
                        .iter()
                        .all(|&k| BigUint::from(k) < tgt[j].size)
            })
    }
}

/// Lazily enumerates every [`BundleMorphism`] in lexicographic order of
/// `(base_map, total_map)`.
#[derive(Debug, Clone)]
pub struct BundleMorphisms {
    source: Vec<usize>,
    target: Vec<usize>,
    // candidate target outcomes per source outcome
    allowed: Vec<Vec<usize>>,
    choice: Vec<usize>,
    total: Vec<Vec<usize>>,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl BundleMorphisms {
    fn base_map(&self) -> Vec<usize> {
        self.choice
            .iter()
            .zip(&self.allowed)
            .map(|(&c, allowed)| allowed[c])
            .collect()
    }

    fn current(&self) -> BundleMorphism {
        BundleMorphism {
            base_map: self.base_map(),
            total_map: self.total.clone(),
        }
    }

    fn base_admissible(&self) -> bool {
        self.source
            .iter()
            .zip(self.base_map())
            .all(|(&size, j)| size == 0 || self.target[j] > 0)
    }

    fn reset_total(&mut self) {
        for fibre in &mut self.total {
            fibre.iter_mut().for_each(|k| *k = 0);
        }
    }

    fn advance_total(&mut self) -> bool {
        let base = self.base_map();
        for i in (0..self.total.len()).rev() {
            let radix = self.target[base[i]];
            for k in (0..self.total[i].len()).rev() {
                if self.total[i][k] + 1 < radix {
                    self.total[i][k] += 1;
                    return true;
                }
                self.total[i][k] = 0;
            }
        }
        false
    }

    fn advance_base(&mut self) -> bool {
        loop {
            let mut carried = true;
            for i in (0..self.choice.len()).rev() {
                if self.choice[i] + 1 < self.allowed[i].len() {
                    self.choice[i] += 1;
                    carried = false;
                    break;
                }
                self.choice[i] = 0;
            }
            if carried {
                return false;
            }
            if self.base_admissible() {
                self.reset_total();
                return true;
            }
        }
    }
}

impl Iterator for BundleMorphisms {
    type Item = BundleMorphism;

    fn next(&mut self) -> Option<BundleMorphism> {
        match self.state {
            State::Done => None,
            State::Fresh => {
                self.state = State::Running;
                if self.allowed.iter().any(Vec::is_empty)
                    || (!self.base_admissible() && !self.advance_base())
                {
                    self.state = State::Done;
                    return None;
                }
                Some(self.current())
            }
            State::Running => {
                if self.advance_total() || self.advance_base() {
                    Some(self.current())
                } else {
                    self.state = State::Done;
                    None
                }
            }
        }
    }
}

fn guarded_sizes(b: &LabelledBundle, side: &str) -> Result<Vec<usize>> {
    let draws = b.num_draws();
    if draws > BigUint::from(ENUMERATION_LIMIT) {
        return Err(Error::EnumerationGuard(format!(
            "{side} has {draws} draws (limit {ENUMERATION_LIMIT})"
        )));
    }
    if b.num_outcomes() > ENUMERATION_LIMIT {
        return Err(Error::EnumerationGuard(format!(
            "{side} has {} outcomes (limit {ENUMERATION_LIMIT})",
            b.num_outcomes()
        )));
    }
    Ok(b.sizes().map(|s| s.to_usize().unwrap()).collect())
}

/// Iterator over all bundle morphisms `source → target`; with `fix_base`,
/// only those whose outcome map is the identity on labels.
pub fn bundle_morphisms(
    source: &LabelledBundle,
    target: &LabelledBundle,
    fix_base: bool,
) -> Result<BundleMorphisms> {
    let source_sizes = guarded_sizes(source, "source")?;
    let target_sizes = guarded_sizes(target, "target")?;
    let allowed: Vec<Vec<usize>> = if fix_base {
        source.align(target)?;
        source
            .labels()
            .map(|l| vec![target.labels().position(|m| m == l).unwrap()])
            .collect()
    } else {
        vec![(0..target_sizes.len()).collect(); source_sizes.len()]
    };
    Ok(BundleMorphisms {
        total: source_sizes.iter().map(|&n| vec![0; n]).collect(),
        choice: vec![0; source_sizes.len()],
        source: source_sizes,
        target: target_sizes,
        allowed,
        state: State::Fresh,
    })
}

/// All bundle morphisms, materialised. See [`bundle_morphisms`].
pub fn enumerate_bundle_morphisms(
    source: &LabelledBundle,
    target: &LabelledBundle,
    fix_base: bool,
) -> Result<Vec<BundleMorphism>> {
    Ok(bundle_morphisms(source, target, fix_base)?.collect())
}
