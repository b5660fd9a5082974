//! Structured verification reports with lossless rational serialization.
//!
//! The JSON payload is fully deterministic: object keys are emitted in
//! sorted order and no timestamps appear inside the body. Wall-clock
//! timing lives in a separate field that callers exclude from golden
//! comparisons.

use num::BigRational;
use serde_json::{json, Map, Value};

use crate::scalar::{rational_string, rational_to_f64, ExactScalar};

pub const SCHEMA: &str = "bwkit-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A claim divergence that is surfaced rather than failed: the
    /// machine-checked facts hold but a cross-referenced printed claim
    /// does not match them.
    Informational,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Informational => "informational",
        }
    }
}

/// One verification outcome with its exact computed values.
#[derive(Clone, Debug)]
pub struct Report {
    pub scenario: String,
    pub status: Status,
    /// Computed values; serialized under sorted keys.
    pub values: Vec<(String, Value)>,
    /// Cross-references to printed claims this scenario checks.
    pub claims: Vec<String>,
    pub timing_seconds: f64,
}

impl Report {
    pub fn new(scenario: impl Into<String>) -> Self {
        Report {
            scenario: scenario.into(),
            status: Status::Pass,
            values: Vec::new(),
            claims: Vec::new(),
            timing_seconds: 0.0,
        }
    }

    pub fn set(&mut self, key: impl Into<String>, value: Value) {
        self.values.push((key.into(), value));
    }

    pub fn require(&mut self, key: impl Into<String>, ok: bool) {
        if !ok {
            self.status = Status::Fail;
        }
        self.set(key, Value::Bool(ok));
    }

    /// Marks a surfaced claim divergence without failing the scenario,
    /// unless it has already failed for another reason.
    pub fn informational(&mut self, key: impl Into<String>, value: Value) {
        if self.status == Status::Pass {
            self.status = Status::Informational;
        }
        self.set(key, value);
    }

    /// Deterministic payload: everything except timing.
    pub fn payload(&self) -> Value {
        let mut vals = Map::new();
        for (k, v) in &self.values {
            vals.insert(k.clone(), v.clone());
        }
        json!({
            "scenario": self.scenario,
            "status": self.status.as_str(),
            "values": Value::Object(vals),
            "claims": self.claims,
        })
    }

    /// Payload plus timing, for report-directory copies.
    pub fn payload_with_timing(&self) -> Value {
        let mut v = self.payload();
        if let Value::Object(map) = &mut v {
            map.insert("timing_seconds".into(), json!(self.timing_seconds));
        }
        v
    }

    pub fn summary_line(&self) -> String {
        format!("{:<13} {}", self.status.as_str().to_uppercase(), self.scenario)
    }
}

/// Lossless rational rendering: exact string plus a float aid.
pub fn rational_value(r: &BigRational) -> Value {
    json!({
        "exact": rational_string(r),
        "float": rational_to_f64(r),
    })
}

/// Complex values as {"re": "p/q", "im": "p/q"}.
pub fn scalar_value(s: &ExactScalar) -> Value {
    json!({
        "re": rational_string(&s.re),
        "im": rational_string(&s.im),
    })
}

/// The combined stream payload, reports ordered by scenario name.
pub fn stream_payload(reports: &[Report]) -> Value {
    let mut sorted: Vec<&Report> = reports.iter().collect();
    sorted.sort_by(|a, b| a.scenario.cmp(&b.scenario));
    json!({
        "schema": SCHEMA,
        "reports": sorted.iter().map(|r| r.payload()).collect::<Vec<_>>(),
    })
}

/// Exit 0 iff every report passed or diverged informationally.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn payload_is_deterministic_and_excludes_timing() {
        let mut r = Report::new("demo");
        r.set("mass2_ratio", json!(rational_string(&rat(4, 3))));
        r.timing_seconds = 1.25;
        let mut r2 = r.clone();
        r2.timing_seconds = 9.5;
        assert_eq!(
            serde_json::to_string(&r.payload()).unwrap(),
            serde_json::to_string(&r2.payload()).unwrap()
        );
        assert!(serde_json::to_string(&r.payload_with_timing())
            .unwrap()
            .contains("timing_seconds"));
    }

    #[test]
    fn rational_rendering_is_exact() {
        let v = rational_value(&rat(-4, 6));
        assert_eq!(v["exact"], json!("-2/3"));
    }

    #[test]
    fn failure_dominates_informational() {
        let mut r = Report::new("demo");
        r.informational("divergence", json!(35));
        assert_eq!(r.status, Status::Informational);
        r.require("identity", false);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(exit_code(&[r]), 1);
    }

    #[test]
    fn stream_orders_by_name() {
        let b = Report::new("b");
        let a = Report::new("a");
        let v = stream_payload(&[b, a]);
        assert_eq!(v["reports"][0]["scenario"], json!("a"));
        assert_eq!(v["schema"], json!(SCHEMA));
    }
}
