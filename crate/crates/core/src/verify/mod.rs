//! Verification suites shared by the command-line driver and the acceptance
//! tests. Every suite returns one [`Check`] row per case; rows carry enough
//! parameters to be sorted into a deterministic report.

pub mod arch;
pub mod padic;
pub mod support;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Outcome of one identity on one case.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub identity: String,
    /// Parameters of the case, e.g. `q=3 n=2 f=04`.
    pub case: String,
    /// Number of points or values compared.
    pub samples: usize,
    /// Worst deviation for tolerance checks; `None` for exact ones.
    pub error: Option<f64>,
    pub tolerance: Option<f64>,
    pub passed: bool,
    /// First mismatch, error, or a note such as skipped samples.
    pub detail: String,
}

impl Check {
    pub fn sort_key(&self) -> (&str, &str, &str) {
        (&self.suite, &self.identity, &self.case)
    }
}

/// Sorts rows by `(suite, identity, case)`.
pub fn sort_checks(checks: &mut [Check]) {
    checks.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

pub fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed)
}

/// An RNG for one case, derived from the run seed and the case coordinates
/// so that cases can be generated in any order.
pub fn case_rng(seed: u64, tags: &[u64]) -> ChaCha8Rng {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for t in tags {
        h = splitmix(h ^ t.wrapping_mul(0xbf58_476d_1ce4_e5b9));
    }
    ChaCha8Rng::seed_from_u64(h)
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Accumulates exact comparisons, keeping the first mismatch.
pub(crate) struct ExactTally {
    samples: usize,
    failure: Option<String>,
}

impl ExactTally {
    pub fn new() -> Self {
        ExactTally { samples: 0, failure: None }
    }

    pub fn compare<V: PartialEq + std::fmt::Display>(&mut self, lhs: crate::Result<V>, rhs: crate::Result<V>, at: impl std::fmt::Display) {
        self.samples += 1;
        if self.failure.is_some() {
            return;
        }
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => self.failure = Some(format!("at {at}: {a} != {b}")),
            (Err(e), _) | (_, Err(e)) => self.failure = Some(format!("at {at}: {e}")),
        }
    }

    pub fn finish(self, suite: &str, identity: &str, case: String) -> Check {
        Check {
            suite: suite.into(),
            identity: identity.into(),
            case,
            samples: self.samples,
            error: None,
            tolerance: None,
            passed: self.failure.is_none(),
            detail: self.failure.unwrap_or_default(),
        }
    }
}

/// Accumulates tolerance comparisons, keeping the worst one.
pub(crate) struct ToleranceTally {
    samples: usize,
    worst: f64,
    worst_at: String,
    failure: Option<String>,
    skipped: usize,
}

impl ToleranceTally {
    pub fn new() -> Self {
        ToleranceTally { samples: 0, worst: 0.0, worst_at: String::new(), failure: None, skipped: 0 }
    }

    pub fn record(&mut self, err: f64, at: impl std::fmt::Display) {
        self.samples += 1;
        if !(err <= self.worst) {
            self.worst = err;
            self.worst_at = at.to_string();
        }
    }

    pub fn error(&mut self, e: impl std::fmt::Display, at: impl std::fmt::Display) {
        self.samples += 1;
        if self.failure.is_none() {
            self.failure = Some(format!("at {at}: {e}"));
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn finish(self, suite: &str, identity: &str, case: String, tol: f64) -> Check {
        let passed = self.failure.is_none() && self.worst <= tol;
        let mut detail = match self.failure {
            Some(f) => f,
            None if self.samples > 0 => format!("worst at {}", self.worst_at),
            None => String::new(),
        };
        if self.skipped > 0 {
            detail = format!("{detail}; {} skipped", self.skipped).trim_start_matches("; ").to_string();
        }
        Check {
            suite: suite.into(),
            identity: identity.into(),
            case,
            samples: self.samples,
            error: Some(self.worst),
            tolerance: Some(tol),
            passed,
            detail,
        }
    }
}
