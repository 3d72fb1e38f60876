//! Check records and versioned JSON reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "qsuper-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one named check, with a witness describing any failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(w) => Self::fail(name, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

/// A suite run: parameters, ordered checks and optional result data.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub suite: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
    pub passed: bool,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA,
            suite: suite.into(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            data: BTreeMap::new(),
            passed: true,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.passed &= c.passed();
            self.checks.push(c);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering: one line per check, then the data entries.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            match &c.witness {
                Some(w) => out.push_str(&format!("{status} {}: {w}\n", c.name)),
                None => out.push_str(&format!("{status} {}\n", c.name)),
            }
        }
        for (k, v) in &self.data {
            match v {
                Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                other => out.push_str(&format!("{k}: {other}\n")),
            }
        }
        out
    }
}
