//! Batch runner for the named verification checks, with a JSON report.

mod checks;

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

pub use checks::{find, Check, CheckFn, REGISTRY};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    pub has_omega: bool,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self { has_omega: false, seed: 42, samples: 1000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub witness: Value,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub configuration: Config,
    pub results: Vec<CheckResult>,
    pub overall: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum UsageError {
    #[error("unknown check id `{0}` (see --list)")]
    UnknownCheck(String),
    #[error("no checks requested")]
    Empty,
}

/// Expands `all` and validates every id before anything runs.
pub fn resolve(ids: &[String]) -> Result<Vec<&'static Check>, UsageError> {
    if ids.is_empty() {
        return Err(UsageError::Empty);
    }
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend(REGISTRY.iter());
        } else {
            out.push(find(id).ok_or_else(|| UsageError::UnknownCheck(id.clone()))?);
        }
    }
    Ok(out)
}

pub fn run_check(check: &Check, config: &Config) -> CheckResult {
    let start = Instant::now();
    let (status, witness) = match (check.run)(config) {
        Ok((true, w)) => (Status::Pass, w),
        Ok((false, w)) => (Status::Fail, w),
        Err(e) => (Status::Error, json!({ "error": e.to_string() })),
    };
    CheckResult {
        check_id: check.id.to_string(),
        paper_anchor: check.anchor.to_string(),
        status,
        witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn panicked(check: &Check) -> CheckResult {
    CheckResult {
        check_id: check.id.to_string(),
        paper_anchor: check.anchor.to_string(),
        status: Status::Error,
        witness: json!({ "error": "check panicked" }),
        elapsed_ms: 0,
    }
}

/// Runs the checks concurrently; results keep the requested order.
pub fn run(ids: &[String], config: &Config) -> Result<Report, UsageError> {
    let checks = resolve(ids)?;
    let results: Vec<CheckResult> = std::thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|c| (c, s.spawn(move || run_check(c, config)))).collect();
        handles.into_iter().map(|(c, h)| h.join().unwrap_or_else(|_| panicked(c))).collect()
    });
    let overall = if results.iter().all(|r| r.status == Status::Pass) { Status::Pass } else { Status::Fail };
    Ok(Report { tool_version: TOOL_VERSION.to_string(), configuration: config.clone(), results, overall })
}

impl Report {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering of the same data.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let tag = match r.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Error => "ERROR",
            };
            let _ = writeln!(s, "{tag} {:<18} {:>7} ms  {}", r.check_id, r.elapsed_ms, r.witness);
        }
        let _ = writeln!(
            s,
            "overall: {} ({} checks, seed {}, samples {}, has_omega {})",
            if self.passed() { "pass" } else { "fail" },
            self.results.len(),
            self.configuration.seed,
            self.configuration.samples,
            self.configuration.has_omega
        );
        s
    }
}

/// The registry as `id  description` lines.
pub fn list_text() -> String {
    REGISTRY.iter().map(|c| format!("{:<18} {}\n", c.id, c.anchor)).collect()
}
