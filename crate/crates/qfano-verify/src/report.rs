//! Check results and report formatting.

use serde::{Deserialize, Serialize};

/// Execution context handed to every check: the run seed, the number of
/// samples per randomized sub-check, and the coefficient-degree cap for
/// ungraded certificate searches.
#[derive(Debug, Clone, Copy)]
pub struct RunCtx {
    pub seed: u64,
    pub trials: usize,
    pub degree_bound: i64,
}

impl Default for RunCtx {
    fn default() -> Self {
        RunCtx {
            seed: 1,
            trials: 25,
            degree_bound: 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A bounded search returned nothing; not a refutation.
    Inconclusive,
    /// A derived value disagrees with a printed one; reported, and
    /// whitelisted entries do not fail the run.
    Discrepancy,
}

/// One verification result. `id` is stable across runs and unique per run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Milliseconds; normalized to 0 in machine output so that reports are
    /// byte-identical across runs (wall time goes to the text format only).
    pub elapsed_ms: u64,
    pub notes: String,
}

impl CheckResult {
    pub fn pass(id: &str, notes: impl Into<String>) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            status: Status::Pass,
            witness: None,
            elapsed_ms: 0,
            notes: notes.into(),
        }
    }

    pub fn fail(id: &str, notes: impl Into<String>) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            status: Status::Fail,
            witness: None,
            elapsed_ms: 0,
            notes: notes.into(),
        }
    }

    pub fn inconclusive(id: &str, notes: impl Into<String>) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            status: Status::Inconclusive,
            witness: None,
            elapsed_ms: 0,
            notes: notes.into(),
        }
    }

    pub fn discrepancy(id: &str, notes: impl Into<String>) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            status: Status::Discrepancy,
            witness: None,
            elapsed_ms: 0,
            notes: notes.into(),
        }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> CheckResult {
        self.witness = Some(w.into());
        self
    }

    /// Convenience: pass/fail from a boolean.
    pub fn from_bool(id: &str, ok: bool, notes: impl Into<String>) -> CheckResult {
        if ok {
            Self::pass(id, notes)
        } else {
            Self::fail(id, notes)
        }
    }
}

/// Machine format: one JSON object per line, sorted by id, `elapsed_ms`
/// normalized to zero.
pub fn machine_report(results: &[CheckResult]) -> String {
    let mut sorted: Vec<CheckResult> = results.to_vec();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    let mut out = String::new();
    for mut r in sorted {
        r.elapsed_ms = 0;
        out.push_str(&serde_json::to_string(&r).expect("serialize"));
        out.push('\n');
    }
    out
}

/// Human-readable table with wall times and a summary line.
pub fn text_report(results: &[CheckResult]) -> String {
    let mut sorted: Vec<&CheckResult> = results.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    let width = sorted.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    let mut counts = [0usize; 4];
    for r in &sorted {
        let tag = match r.status {
            Status::Pass => {
                counts[0] += 1;
                "PASS"
            }
            Status::Fail => {
                counts[1] += 1;
                "FAIL"
            }
            Status::Inconclusive => {
                counts[2] += 1;
                "INCONCLUSIVE"
            }
            Status::Discrepancy => {
                counts[3] += 1;
                "DISCREPANCY"
            }
        };
        out.push_str(&format!(
            "{:<w$}  {:<12}  {:>6} ms  {}\n",
            r.id,
            tag,
            r.elapsed_ms,
            r.notes,
            w = width
        ));
        if let Some(wit) = &r.witness {
            out.push_str(&format!("{:<w$}  witness: {}\n", "", wit, w = width));
        }
    }
    out.push_str(&format!(
        "summary: {} pass, {} fail, {} inconclusive, {} discrepancy\n",
        counts[0], counts[1], counts[2], counts[3]
    ));
    out
}
