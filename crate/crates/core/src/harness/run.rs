use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::report::{ClassKey, ClassSample, Empirical, FailedTrial, Predicted, Report, ReportMetadata};
use super::{compare, ExperimentConfig, HarnessError};
use crate::asymptotics::{predict, ApproxBound};
use crate::ensemble::{default_max_retries, realize_degree_sequence, sample_with_rng};
use crate::enumeration::{census, EnumerationError, MultiplicityTable, SearchOptions};
use crate::rng::{stream_rng, trial_stream};

/// Largest tolerated share of failed trials at one block length.
pub const MAX_FAILED_FRACTION: f64 = 0.2;

enum TrialError {
    Budget(String),
    Other(String),
}

/// Run every trial of `config`, aggregate the censuses and compare them with
/// the predicted class multiplicities.
///
/// Trial `t` at sweep point `p` draws from the stream `trial_stream(p, t)` of
/// the base seed, so the report depends on the configuration only.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Report, HarnessError> {
    config.validate()?;
    let sweep = config.sweep();
    let options = SearchOptions {
        budget: config.budget,
        verify_unique: false,
        strategy: config.strategy,
    };
    let mut empirical: Empirical = BTreeMap::new();
    let mut failed_trials = Vec::new();
    let mut per_point = Vec::new();
    for (point, &n) in sweep.iter().enumerate() {
        let mut spec = config.spec.clone();
        spec.n = n;
        let seq = realize_degree_sequence(&spec)?;
        let retries = config.max_retries.unwrap_or_else(|| default_max_retries(n));
        let outcomes: Vec<Result<MultiplicityTable, TrialError>> = (0..config.trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = stream_rng(config.seed, trial_stream(point, trial));
                let graph = sample_with_rng(&seq, &mut rng, config.girth(), retries)
                    .map_err(|e| TrialError::Other(e.to_string()))?;
                census(&graph, &config.categories, config.a_max, config.b_max, &options).map_err(|e| match e {
                    EnumerationError::BudgetExceeded { .. } => TrialError::Budget(e.to_string()),
                    other => TrialError::Other(other.to_string()),
                })
            })
            .collect();
        let mut tables = Vec::new();
        let mut budget_failures = 0;
        for (trial, outcome) in outcomes.into_iter().enumerate() {
            match outcome {
                Ok(table) => tables.push(table),
                Err(e) => {
                    let error = match e {
                        TrialError::Budget(m) => {
                            budget_failures += 1;
                            m
                        }
                        TrialError::Other(m) => m,
                    };
                    failed_trials.push(FailedTrial { n, trial, error });
                }
            }
        }
        let failed = config.trials - tables.len();
        if failed as f64 > MAX_FAILED_FRACTION * config.trials as f64 {
            return Err(HarnessError::TooManyFailures {
                n,
                failed,
                trials: config.trials,
                budget: budget_failures > 0,
                last: failed_trials.last().map(|f| f.error.clone()).unwrap_or_default(),
            });
        }
        per_point.push((n, tables));
    }

    let observed: BTreeSet<ClassKey> = per_point
        .iter()
        .flat_map(|(_, tables)| tables.iter().flat_map(|t| t.iter().map(|(k, _)| k)))
        .collect();
    let predicted = predictions(config, &observed);
    let keys: BTreeSet<ClassKey> = observed.iter().chain(predicted.keys()).copied().collect();
    for key in &keys {
        let samples = per_point
            .iter()
            .map(|(n, tables)| {
                let counts: Vec<f64> = tables.iter().map(|t| t.get(key.0, key.1, key.2) as f64).collect();
                ClassSample::from_counts(*n, &counts)
            })
            .collect();
        empirical.insert(*key, samples);
    }

    Ok(Report {
        metadata: ReportMetadata {
            seed: config.seed,
            sweep,
            trials: config.trials,
            girth_min: config.girth(),
            failure_policy: format!(
                "failed trials are skipped and listed; the run aborts when more than {}% fail at one block length",
                MAX_FAILED_FRACTION * 100.0
            ),
            failed_trials,
        },
        rows: compare(&empirical, &predicted, &config.tolerance),
    })
}

/// Predictions for every observed class plus every class of the grid with a
/// positive finite estimate. Unavailable predictions are `NaN`.
fn predictions(config: &ExperimentConfig, observed: &BTreeSet<ClassKey>) -> Predicted {
    let mut out = BTreeMap::new();
    for &category in &config.categories {
        for a in 1..=config.a_max {
            for b in 0..=config.b_max {
                let key = (category, a, b);
                let mut bound = match predict::<f64>(&config.spec, category, a, b, config.ets_girth, config.ets_mode) {
                    Ok(bound) => bound,
                    Err(e) => ApproxBound::new(f64::NAN, f64::NAN, "unsupported", e.to_string()),
                };
                // Surviving structures are built on a 2a-cycle, which the girth bound rules out.
                if config.girth().is_some_and(|g| 2 * a < g) && bound.estimate.is_finite() && bound.estimate > 0.0 {
                    bound = ApproxBound::zero("girth-excluded", "the class needs a cycle shorter than the girth bound");
                }
                let positive = bound.estimate.is_finite() && bound.estimate > 0.0;
                if positive || observed.contains(&key) {
                    out.insert(key, bound);
                }
            }
        }
    }
    out
}
