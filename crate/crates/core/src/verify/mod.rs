//! Executable checks of the size bounds: exhaustive enumeration at tiny
//! parameters, seeded sampling above, and constructive checks of the
//! extremal families.

mod claims;
mod combin;
mod constructive;
mod kernel;
mod report;
mod suite;
mod threshold;
mod universal;

use std::fmt;
use std::sync::Arc;

pub use claims::{Assertion, ClaimId, ClaimSpec, Consequent, Quantifier, Relation};
pub use combin::{binomial, next_subset, unrank};
pub use constructive::{check_constructive, check_tightness, DIAGONAL_NOTE};
pub use kernel::{Evaluator, Universe, KERNEL_LIMIT};
pub use report::{Evidence, Mode, Outcome, VerificationReport};
pub use suite::{default_suite, exit_code, run_suite, suite_for, suite_report, CheckKind, SuiteItem, SuiteReport, BAND_MIN_Q};
pub use threshold::{threshold_search, threshold_search_unpruned, ThresholdResult};
pub use universal::{
    check_universal, check_universal_scoped, default_scope, exhaustive_count, sample_subset, Scope, Strategy,
};

pub const DEFAULT_WORK_CAP: u64 = 10_000_000;
pub const DEFAULT_SAMPLES: u64 = 10_000;

/// Called with (examined so far, planned total) during long checks.
pub type Progress = Arc<dyn Fn(u64, u64) + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RequestedMode {
    /// Exhaustive when the subset count fits the cap, sampled otherwise.
    #[default]
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Clone)]
pub struct Budget {
    /// Maximum number of subsets an exhaustive check may enumerate.
    pub cap: u64,
    pub samples: u64,
    pub seed: u64,
    pub mode: RequestedMode,
    pub progress: Option<Progress>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            cap: DEFAULT_WORK_CAP,
            samples: DEFAULT_SAMPLES,
            seed: 0,
            mode: RequestedMode::Auto,
            progress: None,
        }
    }
}

impl fmt::Debug for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Budget")
            .field("cap", &self.cap)
            .field("samples", &self.samples)
            .field("seed", &self.seed)
            .field("mode", &self.mode)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}
