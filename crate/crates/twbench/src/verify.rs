//! Shared verification plumbing: counterexamples and check reports.
//!
//! Every verification routine in the crate either succeeds (possibly
//! returning extracted data) or fails with a [`Counterexample`] naming the
//! violated property and a concrete witness.

use std::fmt;

/// A failed verification: which check broke and a printable witness.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{check}: {witness}")]
pub struct Counterexample {
    pub check: String,
    pub witness: String,
}

impl Counterexample {
    pub fn new(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Counterexample {
            check: check.into(),
            witness: witness.into(),
        }
    }
}

/// Outcome of one named check inside a larger report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail: None,
        }
    }

    pub fn pass_with(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail: Some(detail.into()),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}{}",
            if self.passed { "ok" } else { "FAIL" },
            self.name,
            match &self.detail {
                Some(d) => format!(" ({d})"),
                None => String::new(),
            }
        )
    }
}
