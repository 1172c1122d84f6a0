use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// How a check covered its case space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive,
    Sampled,
    Skipped,
}

/// A violated relation: the inputs (textual formats) and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub case: u64,
    pub inputs: Vec<String>,
    pub relation: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub check: String,
    pub coverage: Coverage,
    pub cases: u64,
    pub failure_count: u64,
    /// The first [`MAX_RECORDED_FAILURES`] failures by case index.
    pub failures: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub const MAX_RECORDED_FAILURES: usize = 16;

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub(crate) fn skipped(suite: &str, check: &str, note: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            check: check.into(),
            coverage: Coverage::Skipped,
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            note: Some(note.into()),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.coverage, self.passed()) {
            (Coverage::Skipped, _) => "SKIP",
            (_, true) => "PASS",
            (_, false) => "FAIL",
        };
        write!(
            f,
            "{status} {}/{}: {} cases ({}), {} failures",
            self.suite,
            self.check,
            self.cases,
            match self.coverage {
                Coverage::Exhaustive => "exhaustive",
                Coverage::Sampled => "sampled",
                Coverage::Skipped => "skipped",
            },
            self.failure_count
        )?;
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunParameters {
    pub p: u32,
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub samples: u64,
    pub seed: u64,
    pub weights: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<String>,
}

/// Outcome of a verification run. Serialization omits the wall time so that a fixed
/// configuration always produces the same bytes.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: RunParameters,
    pub checks: Vec<CheckReport>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn failure_count(&self) -> u64 {
        self.checks.iter().map(|c| c.failure_count).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
