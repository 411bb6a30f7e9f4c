//! Structured check reports shared by the verification suite and the CLI.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Noteworthy but not a failure (e.g. an unexpected degree on a custom
    /// space).
    Flag,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Flag => "FLAG",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, status: CheckStatus, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status, detail: detail.into() }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        Self::new(name, status, detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportValues {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spaces: Option<Vec<String>>,
}

impl ReportValues {
    pub fn is_empty(&self) -> bool {
        *self == ReportValues::default()
    }
}

/// Outcome of one command. `elapsed_ms` is only filled when timing is
/// requested, so that reports for identical inputs are identical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<ReportValues>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), space: None, checks: Vec::new(), values: None, elapsed_ms: None }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn values_mut(&mut self) -> &mut ReportValues {
        self.values.get_or_insert_with(ReportValues::default)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// No check failed (flags are allowed).
    pub fn passed(&self) -> bool {
        self.count(CheckStatus::Fail) == 0
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(space) = &self.space {
            let _ = writeln!(out, "space: {space}");
        }
        for c in &self.checks {
            let _ = writeln!(out, "{}  {}  {}", c.status.label(), c.name, c.detail);
        }
        if let Some(v) = &self.values {
            if let Some(b) = &v.b {
                let _ = writeln!(out, "b: [{}]", b.join(", "));
            }
            if let Some(u) = &v.u {
                let _ = writeln!(out, "u: {u}");
            }
            if let Some(d) = &v.dims {
                let d: Vec<String> = d.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "dims: [{}]", d.join(", "));
            }
            if let Some(r) = &v.result {
                let _ = writeln!(out, "result: {r}");
            }
            if let Some(s) = &v.spaces {
                for name in s {
                    let _ = writeln!(out, "{name}");
                }
            }
        }
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed, {} flagged",
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Flag)
        );
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed_ms: {ms}");
        }
        out
    }
}
