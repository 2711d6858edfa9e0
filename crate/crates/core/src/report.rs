//! Lists of failed identities produced by the checkers.

use serde::Serialize;

/// One violated identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Short name of the identity, e.g. `antipode-left` or `d_i d_j`.
    pub identity: String,
    /// Where it failed: degree, indices or basis tuple.
    pub location: String,
}

/// Result of a check; empty iff every identity holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn is_empty(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, identity: impl Into<String>, location: impl Into<String>) {
        self.failures.push(Failure { identity: identity.into(), location: location.into() });
    }

    /// Records a failure unless `ok` holds.
    pub fn require(&mut self, ok: bool, identity: impl Into<String>, location: impl FnOnce() -> String) {
        if !ok {
            self.fail(identity, location());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.failures.extend(other.failures);
    }

    pub fn prefixed(mut self, prefix: &str) -> Report {
        for f in &mut self.failures {
            f.identity = format!("{prefix}: {}", f.identity);
        }
        self
    }

    pub fn has(&self, identity: &str) -> bool {
        self.failures.iter().any(|f| f.identity.contains(identity))
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "ok");
        }
        for x in &self.failures {
            writeln!(f, "{} at {}", x.identity, x.location)?;
        }
        Ok(())
    }
}
