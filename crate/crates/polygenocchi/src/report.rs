//! Verification report plumbing shared by the closed-form certifiers and the
//! CLI. A report is a flat list of exact-comparison case records plus the
//! ledger of places where a printed formula differs from the reconstructed
//! form that actually matches the series oracle.

use serde::{Deserialize, Serialize};

/// One exact comparison: an oracle value against a closed-form value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    /// Rendered parameter set the case ran under.
    pub params: String,
    pub n: usize,
    /// Oracle-side value (exact rational/polynomial text, or an error name).
    pub oracle: String,
    /// Closed-form-side value in the same rendering.
    pub closed: String,
    pub equal: bool,
}

/// A printed-formula reading that had to be repaired to match the oracle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deviation {
    /// Which statement the divergence lives in.
    pub theorem: String,
    /// The reading as printed.
    pub printed: String,
    /// The reading that certifies against the oracle.
    pub reconstructed: String,
    /// The specific index or argument that differs.
    pub note: String,
}

/// Outcome of one verification suite. `passed` holds exactly when every case
/// record compared equal; deviations are informational and never fail a suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: Vec<CaseRecord>,
    pub deviations: Vec<Deviation>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn new(suite: &str) -> VerifyReport {
        VerifyReport {
            suite: suite.to_string(),
            cases: Vec::new(),
            deviations: Vec::new(),
            passed: true,
        }
    }

    pub fn case(
        &mut self,
        params: impl Into<String>,
        n: usize,
        oracle: impl Into<String>,
        closed: impl Into<String>,
        equal: bool,
    ) {
        self.cases.push(CaseRecord {
            params: params.into(),
            n,
            oracle: oracle.into(),
            closed: closed.into(),
            equal,
        });
        self.passed &= equal;
    }

    pub fn deviation(
        &mut self,
        theorem: impl Into<String>,
        printed: impl Into<String>,
        reconstructed: impl Into<String>,
        note: impl Into<String>,
    ) {
        let d = Deviation {
            theorem: theorem.into(),
            printed: printed.into(),
            reconstructed: reconstructed.into(),
            note: note.into(),
        };
        if !self.deviations.contains(&d) {
            self.deviations.push(d);
        }
    }

    /// Fold another suite's records into this one (used by the aggregate
    /// suite). Deviations dedupe so each entry appears exactly once.
    pub fn absorb(&mut self, other: VerifyReport) {
        self.passed &= other.passed;
        self.cases.extend(other.cases);
        for d in other.deviations {
            if !self.deviations.contains(&d) {
                self.deviations.push(d);
            }
        }
    }
}
