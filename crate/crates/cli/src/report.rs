//! Report model and serialization. The JSON layout is versioned as
//! `qc-cartan/1`; numbers that may exceed 64 bits are carried as decimal
//! strings. Timings are recorded but kept out of the JSON serialization by
//! default so that identical configurations produce byte-identical reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "qc-cartan/1";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// Which rule of the construction this check certifies.
    pub rule: String,
    pub status: Status,
    pub witness: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub n: Vec<u16>,
    pub format: String,
    pub seed: u64,
    pub jobs: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub config: ConfigEcho,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Report {
    pub fn new(config: ConfigEcho, mut checks: Vec<CheckRecord>, with_timings: bool) -> Report {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        if !with_timings {
            for c in &mut checks {
                c.timing_ms = None;
            }
        }
        let summary = Summary {
            pass: checks.iter().filter(|c| c.status == Status::Pass).count(),
            fail: checks.iter().filter(|c| c.status == Status::Fail).count(),
            skipped: checks
                .iter()
                .filter(|c| c.status == Status::Skipped)
                .count(),
        };
        Report {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            config,
            checks,
            summary,
        }
    }

    pub fn any_fail(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "qc-cartan {} ({})", self.tool_version, self.schema);
        let _ = writeln!(
            s,
            "command: {}   n: {:?}   seed: {}",
            self.config.command, self.config.n, self.config.seed
        );
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let timing = c
                .timing_ms
                .map(|t| format!(" [{t} ms]"))
                .unwrap_or_default();
            let _ = writeln!(s, "{status}  {:<34} {}{timing}", c.id, c.rule);
            for (k, v) in &c.witness {
                let _ = writeln!(s, "      {k} = {v}");
            }
        }
        let _ = writeln!(
            s,
            "summary: {} pass, {} fail, {} skipped",
            self.summary.pass, self.summary.fail, self.summary.skipped
        );
        s
    }
}

/// Helper for building witness maps.
pub fn w() -> WitnessBuilder {
    WitnessBuilder(BTreeMap::new())
}

pub struct WitnessBuilder(BTreeMap<String, Value>);

impl WitnessBuilder {
    pub fn num(mut self, key: &str, v: u64) -> Self {
        self.0.insert(key.into(), Value::from(v));
        self
    }

    pub fn str(mut self, key: &str, v: impl Into<String>) -> Self {
        self.0.insert(key.into(), Value::from(v.into()));
        self
    }

    pub fn boolean(mut self, key: &str, v: bool) -> Self {
        self.0.insert(key.into(), Value::from(v));
        self
    }

    pub fn nums(mut self, key: &str, v: &[u64]) -> Self {
        self.0.insert(key.into(), Value::from(v.to_vec()));
        self
    }

    pub fn done(self) -> BTreeMap<String, Value> {
        self.0
    }
}
