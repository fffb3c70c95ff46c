//! Command reports: one JSON-serializable structure with a matching
//! human-readable rendering (both derive pass/fail from the same checks).

use serde::Serialize;
use xmod_core::VerificationReport;

/// The outcome of one CLI invocation.
#[derive(Serialize)]
pub struct Report {
    /// Echo of the executed command.
    pub command: String,
    /// RNG seed used for probe sampling.
    pub seed: u64,
    /// Free-form informational notes (element tables, group orders, ...).
    pub notes: Vec<String>,
    /// Every verification suite that ran.
    pub checks: Vec<VerificationReport>,
    /// `true` iff every check passed.
    pub passed: bool,
    /// Wall-clock time in milliseconds.
    pub wall_ms: u128,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Report {
        Report {
            command: command.into(),
            seed,
            notes: Vec::new(),
            checks: Vec::new(),
            passed: true,
            wall_ms: 0,
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn push(&mut self, check: VerificationReport) {
        self.passed &= check.passed();
        self.checks.push(check);
    }

    /// Human-readable rendering. Pass/fail content matches [`Report::json`].
    pub fn text(&self) -> String {
        let mut out = format!("command: {}\nseed: {}\n", self.command, self.seed);
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        for c in &self.checks {
            out.push_str(&c.summary());
            out.push('\n');
        }
        out.push_str(&format!(
            "overall: {} ({} checks, {} ms)\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.wall_ms
        ));
        out
    }

    /// Machine-readable rendering.
    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
