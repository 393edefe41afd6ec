//! Bundles `π_d: d(1) → d(0)` with named outcomes.
//!
//! A bundle is stored as its list of fibres: one `(label, size)` pair per
//! outcome, where the size is the number of draws over that outcome.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::DirPoly;

/// One outcome of a bundle together with the size of its fibre.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fibre {
    pub label: String,
    pub size: BigUint,
}

/// An ordered list of fibres with pairwise distinct labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LabelledBundle {
    fibres: Vec<Fibre>,
}

impl LabelledBundle {
    pub fn new<I, L, S>(fibres: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L, S)>,
        L: Into<String>,
        S: Into<BigUint>,
    {
        let fibres: Vec<Fibre> = fibres
            .into_iter()
            .map(|(label, size)| Fibre {
                label: label.into(),
                size: size.into(),
            })
            .collect();
        let mut seen = HashSet::with_capacity(fibres.len());
        for fibre in &fibres {
            if !seen.insert(fibre.label.as_str()) {
                return Err(Error::DuplicateLabel(fibre.label.clone()));
            }
        }
        Ok(Self { fibres })
    }

    /// Fibres labelled `x1, x2, ...` in the given order.
    pub fn from_sizes<I, S>(sizes: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<BigUint>,
    {
        Self {
            fibres: sizes
                .into_iter()
                .enumerate()
                .map(|(i, size)| Fibre {
                    label: default_label(i),
                    size: size.into(),
                })
                .collect(),
        }
    }

    /// One fibre per outcome of `d`: `a_j` fibres of size `j` for every term.
    ///
    /// Without explicit labels, outcomes are named `x1..xk` in descending
    /// base order. Explicit labels are assigned in that same order.
    pub fn from_poly(d: &DirPoly, labels: Option<Vec<String>>) -> Result<Self> {
        let outcomes = d.num_outcomes();
        let count = outcomes
            .to_usize()
            .ok_or_else(|| Error::TooLarge(format!("{outcomes} outcomes")))?;
        if let Some(labels) = &labels {
            if labels.len() != count {
                return Err(Error::LabelCountMismatch {
                    expected: outcomes.to_string(),
                    found: labels.len(),
                });
            }
        }
        let sizes = d.terms().rev().flat_map(|(base, coefficient)| {
            // fits: the total was checked above
            std::iter::repeat_n(base.clone(), coefficient.to_usize().unwrap())
        });
        match labels {
            None => Ok(Self::from_sizes(sizes)),
            Some(labels) => Self::new(labels.into_iter().zip(sizes)),
        }
    }

    /// The polynomial `Σ_i |d[i]|^y`, forgetting labels and order.
    pub fn to_poly(&self) -> DirPoly {
        let mut counts: HashMap<&BigUint, u64> = HashMap::new();
        for fibre in &self.fibres {
            *counts.entry(&fibre.size).or_default() += 1;
        }
        DirPoly::from_terms(
            counts
                .into_iter()
                .map(|(size, count)| (size.clone(), BigUint::from(count))),
        )
    }

    pub fn fibres(&self) -> &[Fibre] {
        &self.fibres
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.fibres.iter().map(|f| f.label.as_str())
    }

    pub fn sizes(&self) -> impl Iterator<Item = &BigUint> {
        self.fibres.iter().map(|f| &f.size)
    }

    pub fn size_of(&self, label: &str) -> Option<&BigUint> {
        self.fibres
            .iter()
            .find(|f| f.label == label)
            .map(|f| &f.size)
    }

    pub fn num_outcomes(&self) -> usize {
        self.fibres.len()
    }

    pub fn num_draws(&self) -> BigUint {
        self.sizes().sum()
    }

    pub fn has_draws(&self) -> bool {
        self.sizes().any(|s| !s.is_zero())
    }

    /// Pairs each fibre size of `self` with the fibre of `other` carrying the
    /// same label, in `self`'s order. Fails unless the label sets coincide.
    pub fn align<'a>(
        &'a self,
        other: &'a LabelledBundle,
    ) -> Result<Vec<(&'a BigUint, &'a BigUint)>> {
        let index: HashMap<&str, &BigUint> = other
            .fibres
            .iter()
            .map(|f| (f.label.as_str(), &f.size))
            .collect();
        let mut out = Vec::with_capacity(self.fibres.len());
        for fibre in &self.fibres {
            match index.get(fibre.label.as_str()) {
                Some(size) => out.push((&fibre.size, *size)),
                None => return Err(Error::LabelMismatch(fibre.label.clone())),
            }
        }
        if other.fibres.len() != self.fibres.len() {
            let mine: HashSet<&str> = self.labels().collect();
            let extra = other
                .labels()
                .find(|l| !mine.contains(l))
                .unwrap_or_default();
            return Err(Error::LabelMismatch(extra.to_owned()));
        }
        Ok(out)
    }
}

impl From<&LabelledBundle> for DirPoly {
    fn from(b: &LabelledBundle) -> Self {
        b.to_poly()
    }
}

impl DirPoly {
    /// See [`LabelledBundle::from_poly`].
    pub fn to_bundle(&self) -> Result<LabelledBundle> {
        LabelledBundle::from_poly(self, None)
    }
}

pub(crate) fn default_label(index: usize) -> String {
    format!("x{}", index + 1)
}
