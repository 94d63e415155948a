//! Machine-readable check verdicts and the report document format.
//!
//! Reports are deterministic by construction: maps serialize with sorted
//! keys, ladders and seeds are recorded, and wall-clock timings are left
//! null unless explicitly requested, so identical runs produce identical
//! bytes.

use serde::Serialize;
use serde_json::Value;

use crate::lie::LieAlgebra;
use crate::scalar::Scalar;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    InconclusiveWindow,
}

/// One expected value with a note on where it comes from: `closed-form`
/// (immediate from definitions), `reference` (an established value for
/// this object), or `recomputed` (derived by an independent computation).
#[derive(Debug, Clone, Serialize)]
pub struct Expectation {
    pub name: String,
    pub value: Value,
    pub provenance: String,
}

impl Expectation {
    pub fn closed_form(name: &str, value: Value) -> Self {
        Expectation {
            name: name.into(),
            value,
            provenance: "closed-form".into(),
        }
    }

    pub fn reference(name: &str, value: Value) -> Self {
        Expectation {
            name: name.into(),
            value,
            provenance: "reference".into(),
        }
    }

    pub fn recomputed(name: &str, value: Value) -> Self {
        Expectation {
            name: name.into(),
            value,
            provenance: "recomputed".into(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct InputSummary {
    pub algebra: String,
    pub algebra_hash: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ladder: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Verdict of one verification predicate.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub input: InputSummary,
    pub observed: Value,
    pub expected: Vec<Expectation>,
    pub verdict: Verdict,
    /// Milliseconds; null unless timings were requested, to keep report
    /// bytes reproducible.
    pub wall_ms: Option<u64>,
}

impl CheckReport {
    /// One-line human rendering for standard output.
    pub fn human_line(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::InconclusiveWindow => "inconclusive-window",
        };
        let ms = self
            .wall_ms
            .map(|t| format!(" ({t} ms)"))
            .unwrap_or_default();
        format!("[{verdict}] {}{}", self.id, ms)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl ReportDocument {
    pub fn new(seed: u64, mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        ReportDocument {
            schema_version: SCHEMA_VERSION.into(),
            seed,
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn worst_verdict(&self) -> Verdict {
        let mut worst = Verdict::Pass;
        for c in &self.checks {
            match c.verdict {
                Verdict::Fail => return Verdict::Fail,
                Verdict::InconclusiveWindow => worst = Verdict::InconclusiveWindow,
                Verdict::Pass => {}
            }
        }
        worst
    }
}

/// FNV-1a hash of the labels and structure constants, a short fingerprint
/// for input summaries.
pub fn algebra_hash<F: Scalar>(g: &LieAlgebra<F>) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    for label in g.labels() {
        eat(label.as_bytes());
        eat(b";");
    }
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                eat(format!("{}", g.bracket(i, j)[k]).as_bytes());
                eat(b",");
            }
        }
    }
    format!("{h:016x}")
}
