//! Rendering of command results as `key=value` lines or as JSON.

use dirpoly::BigUint;
use serde_json::{Map, Number, Value};

use crate::files::natural_number;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Natural(BigUint),
    Real(f64),
    Text(String),
}

impl Field {
    fn human(&self) -> String {
        match self {
            Field::Natural(n) => n.to_string(),
            Field::Real(x) => significant(*x, 12),
            Field::Text(t) => t.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Natural(n) => Value::Number(natural_number(n)),
            Field::Real(x) => real_json(*x),
            Field::Text(t) => Value::String(t.clone()),
        }
    }
}

/// JSON numbers cannot hold infinities; those become the strings `"inf"`/`"-inf"`.
pub fn real_json(x: f64) -> Value {
    match Number::from_f64(x) {
        Some(n) => Value::Number(n),
        None if x == f64::INFINITY => Value::String("inf".into()),
        None if x == f64::NEG_INFINITY => Value::String("-inf".into()),
        None => Value::String("nan".into()),
    }
}

/// `x` rounded to `digits` significant digits, without trailing zeros.
pub fn significant(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exponent) = sci.split_once('e').unwrap();
    let exponent: i32 = exponent.parse().unwrap();
    if (-5..digits as i32).contains(&exponent) {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa.to_owned()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_owned()
}

/// An ordered list of named values.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    fields: Vec<(String, Field)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn natural(mut self, key: impl Into<String>, n: BigUint) -> Self {
        self.fields.push((key.into(), Field::Natural(n)));
        self
    }

    pub fn real(mut self, key: impl Into<String>, x: f64) -> Self {
        self.fields.push((key.into(), Field::Real(x)));
        self
    }

    pub fn text(mut self, key: impl Into<String>, t: impl Into<String>) -> Self {
        self.fields.push((key.into(), Field::Text(t.into())));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, f)| f)
    }

    /// One `key=value` line per field; a lone field prints as its bare value.
    pub fn human(&self) -> String {
        match self.fields.as_slice() {
            [(_, only)] => format!("{}\n", only.human()),
            fields => fields
                .iter()
                .map(|(k, f)| format!("{k}={}\n", f.human()))
                .collect(),
        }
    }

    pub fn json_object(&self) -> Map<String, Value> {
        self.fields
            .iter()
            .map(|(k, f)| (k.clone(), f.json()))
            .collect()
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(&Value::Object(self.json_object())).unwrap() + "\n"
    }
}
