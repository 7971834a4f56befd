use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::asymptotics::{EtsMode, DEFAULT_GIRTH};
use crate::ensemble::EnsembleSpec;
use crate::enumeration::{Strategy, A_MAX_CAP};
use crate::structures::Category;

/// Relative acceptance band per category; a row also passes when it is
/// within three standard errors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TolerancePolicy {
    pub relative: f64,
    pub per_category: BTreeMap<Category, f64>,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        TolerancePolicy { relative: 0.2, per_category: BTreeMap::new() }
    }
}

impl TolerancePolicy {
    pub fn relative_for(&self, category: Category) -> f64 {
        self.per_category.get(&category).copied().unwrap_or(self.relative)
    }
}

fn default_categories() -> Vec<Category> {
    vec![Category::Lets]
}

fn default_ets_girth() -> usize {
    DEFAULT_GIRTH
}

fn default_budget() -> u64 {
    crate::enumeration::SearchOptions::default().budget
}

/// One Monte Carlo experiment: `trials` graphs at every block length of the
/// sweep, each censused up to `(a_max, b_max)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub spec: EnsembleSpec,
    /// Block lengths to sweep; empty means just `spec.n`.
    #[serde(default)]
    pub n_values: Vec<usize>,
    pub trials: usize,
    pub a_max: usize,
    pub b_max: usize,
    #[serde(default = "default_categories")]
    pub categories: Vec<Category>,
    /// Overrides `spec.girth_min` when set.
    #[serde(default)]
    pub girth_min: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub tolerance: TolerancePolicy,
    /// Sampler budget; `None` uses the sampler default.
    #[serde(default)]
    pub max_retries: Option<usize>,
    #[serde(default = "default_budget")]
    pub budget: u64,
    /// Girth fed to the ETS predictors.
    #[serde(default = "default_ets_girth")]
    pub ets_girth: usize,
    #[serde(default)]
    pub ets_mode: EtsMode,
    #[serde(default)]
    pub strategy: Strategy,
}

impl ExperimentConfig {
    pub fn new(spec: EnsembleSpec, trials: usize, a_max: usize, b_max: usize) -> Self {
        ExperimentConfig {
            spec,
            n_values: Vec::new(),
            trials,
            a_max,
            b_max,
            categories: default_categories(),
            girth_min: None,
            seed: 0,
            tolerance: TolerancePolicy::default(),
            max_retries: None,
            budget: default_budget(),
            ets_girth: DEFAULT_GIRTH,
            ets_mode: EtsMode::ExactB,
            strategy: Strategy::Auto,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let config: ExperimentConfig = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn sweep(&self) -> Vec<usize> {
        if self.n_values.is_empty() {
            vec![self.spec.n]
        } else {
            self.n_values.clone()
        }
    }

    pub fn girth(&self) -> Option<usize> {
        self.girth_min.or(self.spec.girth_min)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let invalid = |m: String| Err(HarnessError::InvalidConfig(m));
        if self.trials == 0 {
            return invalid("trials must be at least 1".into());
        }
        if self.a_max == 0 || self.a_max > A_MAX_CAP {
            return invalid(format!("a_max must be in 1..={A_MAX_CAP}, got {}", self.a_max));
        }
        if self.categories.is_empty() {
            return invalid("no categories requested".into());
        }
        if self.sweep().contains(&0) {
            return invalid("block lengths must be positive".into());
        }
        let bad = |t: f64| t.is_nan() || t < 0.0;
        if bad(self.tolerance.relative) || self.tolerance.per_category.values().any(|&t| bad(t)) {
            return invalid("tolerances must be non-negative".into());
        }
        self.spec.validate()?;
        if let Some(g) = self.girth() {
            if g < 4 || g % 2 == 1 {
                return invalid(format!("girth bound must be even and >= 4, got {g}"));
            }
        }
        Ok(())
    }
}
