//! Report types and rendering.
//!
//! The JSON layout is versioned by [`SCHEMA_VERSION`]. Everything that
//! varies between otherwise identical runs (wall-clock timestamp, per-check
//! timings) lives under the top-level `timing` key so the rest of the
//! document is byte-for-byte reproducible.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::subgroup::Subgroup;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessSubgroup {
    pub label: String,
    pub order: usize,
    pub generators: Vec<Vec<u32>>,
}

impl WitnessSubgroup {
    pub fn of(label: impl Into<String>, h: &Subgroup<'_>) -> Self {
        WitnessSubgroup {
            label: label.into(),
            order: h.order(),
            generators: h.generator_perms().into_iter().map(Vec::from).collect(),
        }
    }
}

/// Counterexample data. Subgroups are given by generator image arrays so
/// they can be rebuilt from the group alone.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub description: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subgroups: Vec<WitnessSubgroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actual_order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub group: String,
    pub check_id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub observations: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub elapsed_ms: f64,
}

impl CheckResult {
    pub fn skipped(group: &str, check_id: &str, reason: impl Into<String>) -> Self {
        CheckResult {
            group: group.to_string(),
            check_id: check_id.to_string(),
            status: Status::Skipped,
            reason: Some(reason.into()),
            observations: BTreeMap::new(),
            witness: None,
            elapsed_ms: 0.0,
        }
    }

    pub fn key(&self) -> String {
        format!("{}/{}", self.group, self.check_id)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn tally(checks: &[CheckResult]) -> Self {
        let mut s = Summary::default();
        for c in checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub lattice_cap: usize,
    pub max_order: usize,
    pub include_trivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub generated_at_unix: u64,
    pub elapsed_ms: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub suite: String,
    pub config: ReportConfig,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    #[serde(default)]
    pub timing: Timing,
}

impl VerificationReport {
    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn emit_report(report: &VerificationReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Markdown => Ok(render_markdown(report)),
    }
}

fn render_markdown(report: &VerificationReport) -> String {
    let mut out = String::new();
    let s = &report.summary;
    let _ = writeln!(out, "# Verification report: suite `{}`\n", report.suite);
    let _ = writeln!(
        out,
        "tool {} · lattice cap {} · max order {} · pass {} · fail {} · skipped {}\n",
        report.tool_version,
        report.config.lattice_cap,
        report.config.max_order,
        s.pass,
        s.fail,
        s.skipped
    );
    let _ = writeln!(out, "## {}\n", report.suite);
    let _ = writeln!(out, "| group | check | status | details |");
    let _ = writeln!(out, "|---|---|---|---|");
    for c in &report.checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "**FAIL**",
            Status::Skipped => "skipped",
        };
        let mut details: Vec<String> = c
            .observations
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        if let Some(r) = &c.reason {
            details.insert(0, r.clone());
        }
        if let Some(w) = &c.witness {
            details.push(format!("witness: {}", w.description));
        }
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            c.group,
            c.check_id,
            status,
            details.join("; ").replace('|', "\\|")
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn empty() -> VerificationReport {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            tool_version: "0.0.0".into(),
            suite: "all".into(),
            config: ReportConfig {
                lattice_cap: 400,
                max_order: 20000,
                include_trivial: true,
                fault: None,
            },
            checks: vec![],
            summary: Summary::default(),
            timing: Timing::default(),
        }
    }

    #[test]
    fn empty_report_json() {
        let json = emit_report(&empty(), ReportFormat::Json).unwrap();
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["checks"], serde_json::json!([]));
        assert_eq!(
            v["summary"],
            serde_json::json!({"pass": 0, "fail": 0, "skipped": 0})
        );
    }

    #[test]
    fn summary_tallies_and_round_trip() {
        let mut r = empty();
        let mut pass = CheckResult::skipped("S3", "thm1.1", "x");
        pass.status = Status::Pass;
        pass.reason = None;
        pass.observations.insert("left_order".into(), 1.into());
        r.checks.push(pass);
        r.checks
            .push(CheckResult::skipped("S5", "thm1.1", "lattice cap exceeded"));
        r.summary = Summary::tally(&r.checks);
        assert_eq!(
            r.summary,
            Summary {
                pass: 1,
                fail: 0,
                skipped: 1
            }
        );
        let json = emit_report(&r, ReportFormat::Json).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let md = emit_report(&r, ReportFormat::Markdown).unwrap();
        assert!(md.contains("| S3 | thm1.1 | pass | left_order=1 |"));
        assert!(md.contains("lattice cap exceeded"));
    }

    #[test]
    fn unknown_format() {
        assert!(matches!(
            "xml".parse::<ReportFormat>(),
            Err(Error::UnknownFormat(_))
        ));
        assert_eq!(
            "md".parse::<ReportFormat>().unwrap(),
            ReportFormat::Markdown
        );
    }
}
