//! Degree distributions, degree-sequence realization, Tanner graphs and the
//! configuration-model sampler.

mod degrees;
mod graph;
mod sample;
mod spec;

pub use degrees::{realize_degree_sequence, DegreeSequencePair};
pub use graph::{girth, TannerGraph};
pub use sample::{default_max_retries, sample_tanner_graph, sample_with_rng, FailureReason};
pub use spec::{DegreeDistribution, EnsembleSpec};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnsembleError {
    #[error("invalid ensemble spec: {0}")]
    InvalidSpec(String),
    #[error("n = {n} is too small: degree {degree} receives no variable nodes")]
    TooFewNodes { n: usize, degree: usize },
    #[error(
        "infeasible degree sequence: check side misses the {edges} variable-side edges by {deficit} and no repair within the check-degree support closes the gap"
    )]
    Infeasible { edges: usize, deficit: i64 },
    #[error("handshake violated: {variable_edges} variable stubs vs {check_edges} check stubs")]
    Handshake { variable_edges: usize, check_edges: usize },
    #[error("sampling gave up after {attempts} attempts (last failure: {reason})")]
    RetriesExhausted { attempts: usize, reason: FailureReason },
    #[error("girth bound must be an even integer >= 4, got {0}")]
    InvalidGirth(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
