//! Structured check reports shared by every verifier and the CLI.
//!
//! A `Report` is a flat list of named checks, each pass/fail with optional
//! witnesses, plus a dimension table. It renders either as plain text or as
//! stable JSON (`format_version` "1", keys sorted).

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// One violated instance of an identity: the basis tuple it failed on and
/// both evaluated sides, already rendered as basis combinations.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub identity: String,
    pub tuple: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn render(&self) -> String {
        format!(
            "{} at ({}): {} != {}",
            self.identity,
            self.tuple.join(", "),
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Info,
}

/// One named check inside a report.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub format_version: String,
    pub command: String,
    pub status: CheckStatus,
    pub checks: Vec<Check>,
    pub dimensions: BTreeMap<String, i64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            format_version: "1".into(),
            command: command.into(),
            status: CheckStatus::Pass,
            checks: Vec::new(),
            dimensions: BTreeMap::new(),
        }
    }

    /// Record a check; a failing check (not `Info`) fails the whole report.
    pub fn push(
        &mut self,
        name: &str,
        status: CheckStatus,
        detail: Option<String>,
        witnesses: Vec<Witness>,
    ) {
        if status == CheckStatus::Fail {
            self.status = CheckStatus::Fail;
        }
        self.checks.push(Check { name: name.into(), status, detail, witnesses });
    }

    pub fn pass(&mut self, name: &str) {
        self.push(name, CheckStatus::Pass, None, Vec::new());
    }

    pub fn fail(&mut self, name: &str, detail: &str, witnesses: Vec<Witness>) {
        self.push(name, CheckStatus::Fail, Some(detail.into()), witnesses);
    }

    pub fn info(&mut self, name: &str, detail: &str) {
        self.push(name, CheckStatus::Info, Some(detail.into()), Vec::new());
    }

    pub fn record_dim(&mut self, name: &str, value: usize) {
        self.dimensions.insert(name.into(), value as i64);
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let tag = |s: CheckStatus| match s {
            CheckStatus::Pass => "ok",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Info => "info",
        };
        let _ = writeln!(out, "{}: {}", self.command, tag(self.status));
        for check in &self.checks {
            let _ = write!(out, "  [{}] {}", tag(check.status), check.name);
            if let Some(detail) = &check.detail {
                let _ = write!(out, ": {detail}");
            }
            let _ = writeln!(out);
            for w in check.witnesses.iter().take(5) {
                let _ = writeln!(out, "       {}", w.render());
            }
            if check.witnesses.len() > 5 {
                let _ = writeln!(
                    out,
                    "       ... and {} more",
                    check.witnesses.len() - 5
                );
            }
        }
        for (name, value) in &self.dimensions {
            let _ = writeln!(out, "  dim {name} = {value}");
        }
        out
    }
}
