//! Structured results of verification runs.

use serde::{Deserialize, Serialize};

/// One verified identity.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckRecord {
    /// Stable check identifier, e.g. `laplace/column-splits`.
    pub id: String,
    /// Short description of the identity being checked.
    pub paper_ref: String,
    pub pass: bool,
    /// Power of the determinant used to clear inverse-determinant factors
    /// before comparing, when applicable.
    pub clear_power: u32,
    /// Wall time in milliseconds.
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// All checks run for one suite invocation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: &str, n: usize) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            n,
            checks: Vec::new(),
            summary: Summary { pass: 0, fail: 0 },
        }
    }

    pub fn push(&mut self, rec: CheckRecord) {
        self.checks.push(rec);
    }

    /// Sort checks by id and recompute the summary.
    pub fn finalize(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self.summary.pass = self.checks.iter().filter(|c| c.pass).count();
        self.summary.fail = self.checks.len() - self.summary.pass;
    }

    pub fn absorb(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} ({} ms)", c.id, c.ms));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("  counterexample: {ce}"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed\n",
            self.suite, self.summary.pass, self.summary.fail
        ));
        out
    }
}
