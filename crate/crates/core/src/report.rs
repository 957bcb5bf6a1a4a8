//! Structured results of identity checks.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Whether the checked statement is claimed to hold or claimed to fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Holds,
    Fails,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Truncation data recorded by series-based checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    /// Number of coefficients compared per series direction.
    pub terms: usize,
    /// Highest and lowest exponent compared.
    pub top: i64,
    pub bottom: i64,
    /// Description of the bound used to cut the infinite sum.
    pub truncation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: Vec<(String, String)>,
    pub expectation: Expectation,
    pub status: Status,
    /// Number of individual equalities compared.
    pub checks: usize,
    pub witness: Option<String>,
    pub window: Option<Window>,
}

impl VerificationReport {
    pub fn new(id: impl Into<String>) -> Self {
        VerificationReport {
            id: id.into(),
            params: Vec::new(),
            expectation: Expectation::Holds,
            status: Status::Pass,
            checks: 0,
            witness: None,
            window: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn expect_failure(mut self) -> Self {
        self.expectation = Expectation::Fails;
        self
    }

    pub fn with_window(mut self, window: Window) -> Self {
        self.window = Some(window);
        self
    }

    /// Records one comparison; the first failure becomes the witness.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.status == Status::Pass {
            self.status = Status::Fail;
            self.witness = Some(witness());
        }
    }

    /// Marks the report failed because a computation errored.
    pub fn record_error(&mut self, err: &crate::Error) {
        self.checks += 1;
        if self.status == Status::Pass {
            self.status = Status::Fail;
            self.witness = Some(format!("error: {err}"));
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The outcome matches the expectation.
    pub fn as_expected(&self) -> bool {
        matches!(
            (self.expectation, self.status),
            (Expectation::Holds, Status::Pass) | (Expectation::Fails, Status::Fail)
        )
    }

    fn tag(&self) -> &'static str {
        match (self.expectation, self.status) {
            (Expectation::Holds, Status::Pass) => "PASS",
            (Expectation::Holds, Status::Fail) => "FAIL",
            (Expectation::Fails, Status::Fail) => "XFAIL",
            (Expectation::Fails, Status::Pass) => "XPASS",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<5} {}", self.tag(), self.id)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        write!(f, " checks={}", self.checks)?;
        if let Some(w) = &self.window {
            write!(f, " window={}[x^{}..x^{}] cut={}", w.terms, w.top, w.bottom, w.truncation)?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

/// Aggregate of a verification run.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub reports: Vec<VerificationReport>,
}

impl Summary {
    pub fn unexpected(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| !r.as_expected())
    }

    pub fn all_as_expected(&self) -> bool {
        self.unexpected().next().is_none()
    }

    pub fn footer(&self) -> String {
        let bad = self.unexpected().count();
        let xfail = self.reports.iter().filter(|r| r.expectation == Expectation::Fails).count();
        if bad == 0 {
            format!("ALL PASS ({} items, {} expected failures)", self.reports.len(), xfail)
        } else {
            format!("{bad} UNEXPECTED of {} items", self.reports.len())
        }
    }
}
