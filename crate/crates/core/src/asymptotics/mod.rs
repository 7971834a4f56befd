//! Closed-form asymptotic expectations: cycle counts, tree counts and
//! per-class multiplicities of trapping-set categories.

mod classes;
mod cycles;
mod ets;
mod forest;
mod predict;
mod specht;
mod trees;

pub use classes::{abs_expected, lets_expected, ss_expected_a0};
pub use cycles::{
    expected_cycles, expected_cycles_partial_signature, expected_cycles_with_signature,
    CycleSignature,
};
pub use ets::{
    ets_expected_biregular, ets_expected_irregular_min_b, ets_expected_variable_regular, EtsMode,
    DEFAULT_GIRTH,
};
pub use forest::{forest_partitions, ForestPartition};
pub use predict::predict;
pub use specht::specht_ratio;
pub use trees::{basic_tree_count_b, catalan_general, catalan_recursive, TreeCountTable};

use serde::Serialize;
use thiserror::Error;

use crate::scalar::Scalar;
use crate::structures::Category;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AsymptoticsError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid cycle signature: {0}")]
    InvalidSignature(String),
    #[error("no prediction for {category} ({a},{b}): {reason}")]
    Unsupported { category: Category, a: usize, b: usize, reason: String },
}

/// Asymptotic estimate with a guaranteed accuracy band: the true limit lies in
/// `[lower_factor * estimate, estimate]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApproxBound<T> {
    pub estimate: T,
    pub lower_factor: T,
    /// Short name of the closed form that produced the estimate.
    pub formula_id: &'static str,
    /// Why the estimate is zero or infinite, empty otherwise.
    pub note: String,
}

impl<T: Scalar> ApproxBound<T> {
    pub fn new(estimate: T, lower_factor: T, formula_id: &'static str, note: impl Into<String>) -> Self {
        ApproxBound { estimate, lower_factor, formula_id, note: note.into() }
    }

    pub fn zero(formula_id: &'static str, note: impl Into<String>) -> Self {
        Self::new(T::zero(), T::one(), formula_id, note)
    }

    pub fn infinite(formula_id: &'static str, note: impl Into<String>) -> Self {
        Self::new(T::infinity(), T::one(), formula_id, note)
    }

    pub fn lower(&self) -> T {
        self.lower_factor * self.estimate
    }

    pub fn is_exact(&self) -> bool {
        self.lower_factor == T::one()
    }
}
