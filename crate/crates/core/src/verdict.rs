use std::fmt;

use serde::Serialize;

/// Outcome of a check, with a human-readable witness on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { witness: String },
}

impl Verdict {
    pub fn fail(witness: impl Into<String>) -> Self {
        Verdict::Fail {
            witness: witness.into(),
        }
    }

    pub fn from_bool(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::fail(witness())
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail { witness } => Some(witness),
        }
    }

    /// First failure wins.
    pub fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        if self.passed() {
            other()
        } else {
            self
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail { witness } => write!(f, "FAIL ({witness})"),
        }
    }
}

/// A verdict with a name, for reports that list several predicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedVerdict {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl NamedVerdict {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        NamedVerdict {
            name: name.into(),
            verdict,
        }
    }
}
