//! Trapping sets, absorbing sets and stopping sets of random LDPC Tanner
//! graphs: ensemble sampling, exhaustive enumeration and asymptotic
//! multiplicities.

pub mod asymptotics;
pub mod combinatorics;
pub mod ensemble;
pub mod enumeration;
pub mod harness;
pub mod rng;
pub mod scalar;
pub mod structures;

pub use asymptotics::{predict, ApproxBound, AsymptoticsError, EtsMode};
pub use ensemble::{EnsembleError, EnsembleSpec, TannerGraph};
pub use enumeration::{census, EnumerationError, MultiplicityTable, SearchOptions};
pub use harness::{run_experiment, ExperimentConfig, HarnessError, Report};
pub use scalar::Scalar;
pub use structures::{Category, StructureInstance};

pub type ApproxBound32 = ApproxBound<f32>;
pub type ApproxBound64 = ApproxBound<f64>;

/// Double-precision [`predict`].
pub fn predict64(
    spec: &EnsembleSpec,
    category: Category,
    a: usize,
    b: usize,
    g: usize,
    mode: EtsMode,
) -> Result<ApproxBound64, AsymptoticsError> {
    predict(spec, category, a, b, g, mode)
}
