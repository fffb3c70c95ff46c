//! Verification reports: per-law pass/fail with witnesses.

use serde::Serialize;

/// Maximum witnesses recorded per law before truncation.
const MAX_WITNESSES_PER_LAW: usize = 3;

/// A single law failure with its witnessing tuple.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    /// Identifier of the violated law.
    pub law: String,
    /// Rendered witness tuple.
    pub witness: String,
}

/// Outcome of a verification suite: which laws were checked over which
/// quantification domain, and every recorded failure.
///
/// The invariant `passed ⇔ failures.is_empty()` is maintained by
/// construction.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    /// Name of the verified object or suite.
    pub subject: String,
    /// Description of the quantification domain (probe bounds, seed).
    pub probe: String,
    /// Names of all laws that were checked.
    pub laws_checked: Vec<String>,
    /// All recorded failures (empty iff `passed`).
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    /// Fresh report for `subject` quantified over `probe`.
    pub fn new(subject: impl Into<String>, probe: impl Into<String>) -> VerificationReport {
        VerificationReport {
            subject: subject.into(),
            probe: probe.into(),
            laws_checked: Vec::new(),
            failures: Vec::new(),
        }
    }

    /// Whether every checked law held.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records a law check over an iterator of items: `witness(item)` should
    /// return `None` when the law holds and a rendered witness otherwise.
    /// At most a few witnesses are kept per law.
    pub fn law<T>(
        &mut self,
        law: &str,
        items: impl IntoIterator<Item = T>,
        witness: impl Fn(&T) -> Option<String>,
    ) {
        self.laws_checked.push(law.to_string());
        let mut recorded = 0usize;
        for item in items {
            if let Some(w) = witness(&item) {
                if recorded < MAX_WITNESSES_PER_LAW {
                    self.failures.push(Failure { law: law.to_string(), witness: w });
                }
                recorded += 1;
            }
        }
        if recorded > MAX_WITNESSES_PER_LAW {
            self.failures.push(Failure {
                law: law.to_string(),
                witness: format!("... and {} more", recorded - MAX_WITNESSES_PER_LAW),
            });
        }
    }

    /// Records the outcome of an already-evaluated check.
    pub fn law_outcome(&mut self, law: &str, witness: Option<String>) {
        self.laws_checked.push(law.to_string());
        if let Some(w) = witness {
            self.failures.push(Failure { law: law.to_string(), witness: w });
        }
    }

    /// Absorbs another report's laws and failures (prefixing its law names).
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for law in other.laws_checked {
            self.laws_checked.push(format!("{prefix}/{law}"));
        }
        for f in other.failures {
            self.failures.push(Failure { law: format!("{prefix}/{}", f.law), witness: f.witness });
        }
    }

    /// Renders a short human-readable summary.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: PASS ({} laws; {})", self.subject, self.laws_checked.len(), self.probe)
        } else {
            let mut s = format!(
                "{}: FAIL ({} failures / {} laws; {})",
                self.subject,
                self.failures.len(),
                self.laws_checked.len(),
                self.probe
            );
            for f in &self.failures {
                s.push_str(&format!("\n  {}: {}", f.law, f.witness));
            }
            s
        }
    }
}
