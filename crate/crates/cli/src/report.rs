//! Report objects: `{"meta": .., "result": .., "checks": [..]}`.

use std::collections::BTreeMap;

use kvertex_core::{BigRational, Matrix, RatFun, SeriesZ};
use serde::Serialize;
use serde_json::{json, Value};

use crate::parse::rational_text;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        let status = if pass { Status::Pass } else { Status::Fail };
        Check { name: name.into(), status, witness: None }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Meta {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub seed: Option<u64>,
    pub conventions: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub meta: Meta,
    pub result: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON") + "\n"
    }
}

/// Exact values in their canonical text form.
pub trait ExactText {
    fn exact_text(&self) -> String;
}

impl ExactText for BigRational {
    fn exact_text(&self) -> String {
        rational_text(self)
    }
}

impl ExactText for RatFun {
    fn exact_text(&self) -> String {
        self.to_string()
    }
}

pub fn series_json<F: ExactText + kvertex_core::Field>(s: &SeriesZ<F>) -> Value {
    Value::Array(s.coeffs().iter().map(|c| Value::String(c.exact_text())).collect())
}

pub fn matrix_json<F: ExactText + kvertex_core::Field>(m: &Matrix<F>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| Value::String(m.get(i, j).exact_text())).collect()))
        .collect();
    json!(rows)
}
