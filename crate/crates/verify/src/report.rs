//! Check results, reports and their JSON / Markdown renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Degenerate,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Degenerate => "degenerate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub witnesses: Map<String, Value>,
    pub ms: u64,
}

impl CheckResult {
    pub fn witness(&self, key: &str) -> Option<&Value> {
        self.witnesses.get(key)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub degenerate: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(seed: u64, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Degenerate => summary.degenerate += 1,
            }
        }
        Report { version: VERSION.to_string(), seed, checks, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// Zeroes the runtimes, leaving only the seed-determined content.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.ms = 0;
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown report format `{0}` (expected json or md)")]
pub struct UnknownFormat(pub String);

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(UnknownFormat(other.to_string())),
        }
    }
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Markdown => markdown(report),
    }
}

fn markdown(report: &Report) -> String {
    let mut out = String::new();
    let s = &report.summary;
    writeln!(out, "# Verification report").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "version {} · seed {}", report.version, report.seed).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "pass {} · fail {} · degenerate {}", s.pass, s.fail, s.degenerate).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "| check | status | ms |").unwrap();
    writeln!(out, "|---|---|---|").unwrap();
    for c in &report.checks {
        writeln!(out, "| {} | {} | {} |", c.id, c.status.as_str(), c.ms).unwrap();
    }
    for c in &report.checks {
        writeln!(out).unwrap();
        writeln!(out, "## {} ({})", c.id, c.status.as_str()).unwrap();
        writeln!(out).unwrap();
        for (k, v) in &c.witnesses {
            writeln!(out, "- `{k}`: `{v}`").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_valid_json() {
        let r = Report::new(7, Vec::new());
        let text = emit(&r, Format::Json);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["checks"].as_array().unwrap().len(), 0);
        assert_eq!(v["summary"]["pass"], 0);
        let at = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
        assert!(at("version") < at("seed") && at("seed") < at("checks") && at("checks") < at("summary"));
    }

    #[test]
    fn summary_counts() {
        let mk = |id: &str, status| CheckResult { id: id.into(), status, witnesses: Map::new(), ms: 1 };
        let r = Report::new(1, vec![mk("A", Status::Pass), mk("B", Status::Fail), mk("C", Status::Degenerate)]);
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, degenerate: 1 });
        assert!(!r.all_passed());
        let md = emit(&r, Format::Markdown);
        assert!(md.contains("| B | fail | 1 |"));
        assert_eq!("md".parse::<Format>().unwrap(), Format::Markdown);
        assert!("xml".parse::<Format>().is_err());
    }
}
