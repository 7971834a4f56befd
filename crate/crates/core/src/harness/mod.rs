//! Monte Carlo experiments: sample graphs, census them and compare the
//! class means with the asymptotic predictions.

mod config;
mod report;
mod run;

pub use config::{ExperimentConfig, TolerancePolicy};
pub use report::{
    compare, emit_report, ClassKey, ClassSample, ComparisonRow, Empirical, FailedTrial, Predicted,
    Report, ReportFormat, ReportMetadata,
};
pub use run::{run_experiment, MAX_FAILED_FRACTION};

use thiserror::Error;

use crate::ensemble::EnsembleError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Ensemble(#[from] EnsembleError),
    #[error("{failed} of {trials} trials failed at n = {n}: {last}")]
    TooManyFailures { n: usize, failed: usize, trials: usize, budget: bool, last: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("configuration is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl HarnessError {
    /// The run stopped because enumeration budgets ran out.
    pub fn is_budget(&self) -> bool {
        matches!(self, HarnessError::TooManyFailures { budget: true, .. })
    }
}
