//! Bundle files (JSON) and distribution files (CSV).
//!
//! A bundle file lists outcomes with their fibre sizes:
//!
//! ```json
//! {"outcomes": [{"label": "a", "fibre": 4}, {"label": "b", "fibre": 1}]}
//! ```
//!
//! Fibre sizes are JSON integers of any length. Unknown top-level fields are
//! ignored, so the structured output of `from-dist` is itself a bundle file.
//!
//! A distribution file is comma-separated with the header `label,probability`;
//! probabilities are exact fractions `p/q` or integers.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use dirpoly::{BigRational, BigUint, LabelledBundle, RationalDistribution};
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::CliError;

#[derive(Debug, Serialize, Deserialize)]
pub struct BundleFile {
    pub outcomes: Vec<OutcomeRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OutcomeRecord {
    pub label: String,
    pub fibre: Number,
}

pub fn natural_number(n: &BigUint) -> Number {
    Number::from_str(&n.to_string()).expect("decimal digits form a JSON number")
}

impl BundleFile {
    pub fn from_bundle(b: &LabelledBundle) -> Self {
        Self {
            outcomes: b
                .fibres()
                .iter()
                .map(|f| OutcomeRecord {
                    label: f.label.clone(),
                    fibre: natural_number(&f.size),
                })
                .collect(),
        }
    }

    pub fn to_bundle(&self) -> Result<LabelledBundle, CliError> {
        let mut fibres = Vec::with_capacity(self.outcomes.len());
        for outcome in &self.outcomes {
            let text = outcome.fibre.to_string();
            let size = BigUint::from_str(&text).map_err(|_| {
                CliError::BundleFile(format!(
                    "fibre of `{}` must be a natural number, got {text}",
                    outcome.label
                ))
            })?;
            fibres.push((outcome.label.clone(), size));
        }
        Ok(LabelledBundle::new(fibres)?)
    }
}

pub fn parse_bundle(text: &str) -> Result<LabelledBundle, CliError> {
    let file: BundleFile =
        serde_json::from_str(text).map_err(|e| CliError::BundleFile(e.to_string()))?;
    file.to_bundle()
}

pub fn read_bundle(path: &Path) -> Result<LabelledBundle, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_bundle(&text).map_err(|e| e.in_file(path))
}

pub fn bundle_json(b: &LabelledBundle) -> String {
    serde_json::to_string_pretty(&BundleFile::from_bundle(b)).expect("serialisable")
}

pub fn parse_distribution(text: &str) -> Result<RationalDistribution, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let bad = |msg: String| CliError::DistributionFile(msg);
    let headers = reader.headers().map_err(|e| bad(e.to_string()))?;
    if headers.len() != 2 || &headers[0] != "label" || &headers[1] != "probability" {
        return Err(bad("header must be `label,probability`".into()));
    }
    let mut entries = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        if record.len() != 2 {
            return Err(bad(format!("row {} must have two fields", line + 1)));
        }
        let p = BigRational::from_str(&record[1]).map_err(|_| {
            bad(format!(
                "row {}: `{}` is not an exact fraction",
                line + 1,
                &record[1]
            ))
        })?;
        entries.push((record[0].to_owned(), p));
    }
    Ok(RationalDistribution::new(entries)?)
}

pub fn read_distribution(path: &Path) -> Result<RationalDistribution, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_distribution(&text).map_err(|e| e.in_file(path))
}

pub fn distribution_csv(p: &RationalDistribution) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["label", "probability"]).unwrap();
    for (label, q) in p.entries() {
        writer
            .write_record([label.as_str(), &q.to_string()])
            .unwrap();
    }
    String::from_utf8(writer.into_inner().unwrap()).unwrap()
}
