use std::fmt;

use serde::{Serialize, Serializer};

use crate::composition::Composition;

/// One failed check. `composition` is the smallest witness involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: u32,
    pub k: Option<u32>,
    #[serde(serialize_with = "list_form")]
    pub composition: Option<Composition>,
    pub message: String,
}

fn list_form<S: Serializer>(c: &Option<Composition>, s: S) -> Result<S::Ok, S::Error> {
    match c {
        Some(c) => s.serialize_str(&c.list_form()),
        None => s.serialize_none(),
    }
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: u64,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> VerificationReport {
        VerificationReport {
            suite: suite.into(),
            ..Default::default()
        }
    }

    /// Records one check; returns `ok` so it can be chained.
    pub fn check(&mut self, ok: bool, fail: impl FnOnce() -> Failure) -> bool {
        self.checks += 1;
        if !ok {
            self.failures.push(fail());
        }
        ok
    }

    pub fn fail(&mut self, failure: Failure) {
        self.checks += 1;
        self.failures.push(failure);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    /// Sorts failures by `(n, composition)`.
    pub fn finish(mut self) -> VerificationReport {
        self.failures.sort_by(|a, b| {
            (a.n, &a.composition, a.k, &a.message).cmp(&(b.n, &b.composition, b.k, &b.message))
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn minimal_counterexample(&self) -> Option<&Failure> {
        self.failures
            .iter()
            .min_by(|a, b| (a.n, &a.composition).cmp(&(b.n, &b.composition)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(c) = &self.composition {
            write!(f, " {}", c.list_form())?;
        }
        write!(f, ": {}", self.message)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: PASS ({} checks)", self.suite, self.checks)
        } else {
            write!(
                f,
                "{}: FAIL ({} of {} checks failed)",
                self.suite,
                self.failures.len(),
                self.checks
            )?;
            if let Some(m) = self.minimal_counterexample() {
                write!(f, "; minimal counterexample {m}")?;
            }
            Ok(())
        }
    }
}
