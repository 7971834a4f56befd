use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::EnsembleError;

/// Edge-perspective degree distribution: degree -> fraction of edges.
pub type DegreeDistribution = BTreeMap<usize, f64>;

const SUM_TOLERANCE: f64 = 1e-12;

/// An LDPC ensemble given by its edge-perspective degree distributions
/// `lambda` (variable side) and `rho` (check side) and a block length.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub lambda: DegreeDistribution,
    pub rho: DegreeDistribution,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub girth_min: Option<usize>,
}

impl EnsembleSpec {
    pub fn new(
        lambda: DegreeDistribution,
        rho: DegreeDistribution,
        n: usize,
    ) -> Result<Self, EnsembleError> {
        let spec = EnsembleSpec { lambda, rho, n, girth_min: None };
        spec.validate()?;
        Ok(spec)
    }

    /// The `(d_v, d_c)`-biregular ensemble.
    pub fn biregular(d_v: usize, d_c: usize, n: usize) -> Result<Self, EnsembleError> {
        Self::new(BTreeMap::from([(d_v, 1.0)]), BTreeMap::from([(d_c, 1.0)]), n)
    }

    pub fn with_girth(mut self, girth_min: Option<usize>) -> Self {
        self.girth_min = girth_min;
        self
    }

    pub fn from_json(text: &str) -> Result<Self, EnsembleError> {
        let spec: EnsembleSpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn validate(&self) -> Result<(), EnsembleError> {
        for (side, dist) in [("lambda", &self.lambda), ("rho", &self.rho)] {
            if dist.is_empty() {
                return Err(EnsembleError::InvalidSpec(format!("{side} is empty")));
            }
            let mut total = 0.0;
            for (&degree, &frac) in dist {
                if degree == 0 {
                    return Err(EnsembleError::InvalidSpec(format!("{side} has degree 0")));
                }
                if !frac.is_finite() || frac < 0.0 {
                    return Err(EnsembleError::InvalidSpec(format!(
                        "{side}[{degree}] = {frac} is not a nonnegative fraction"
                    )));
                }
                total += frac;
            }
            if (total - 1.0).abs() > SUM_TOLERANCE {
                return Err(EnsembleError::InvalidSpec(format!(
                    "{side} sums to {total}, expected 1"
                )));
            }
        }
        if self.n == 0 {
            return Err(EnsembleError::InvalidSpec("n must be positive".into()));
        }
        if let Some(g) = self.girth_min {
            if g < 4 || g % 2 == 1 {
                return Err(EnsembleError::InvalidGirth(g));
            }
        }
        Ok(())
    }

    pub fn lambda(&self, degree: usize) -> f64 {
        self.lambda.get(&degree).copied().unwrap_or(0.0)
    }

    pub fn rho(&self, degree: usize) -> f64 {
        self.rho.get(&degree).copied().unwrap_or(0.0)
    }

    /// Variable degrees carrying a positive edge fraction, ascending.
    pub fn variable_degrees(&self) -> Vec<usize> {
        support(&self.lambda)
    }

    pub fn check_degrees(&self) -> Vec<usize> {
        support(&self.rho)
    }

    pub fn dv_min(&self) -> usize {
        self.variable_degrees()[0]
    }

    pub fn dv_max(&self) -> usize {
        *self.variable_degrees().last().unwrap()
    }

    pub fn dc_min(&self) -> usize {
        self.check_degrees()[0]
    }

    pub fn dc_max(&self) -> usize {
        *self.check_degrees().last().unwrap()
    }

    /// Degree-1 variables are allowed for sampling, but the cycle and tree
    /// predictors assume `d_vmin >= 2`.
    pub fn has_degree_one_variables(&self) -> bool {
        self.lambda(1) > 0.0
    }

    /// `Σ λ_i (i-1)`, which equals `(2/|E|) Σ_v binom(d(v), 2)`.
    pub fn variable_moment(&self) -> f64 {
        moment(&self.lambda)
    }

    /// `Σ ρ_j (j-1)`, which equals `(2/|E|) Σ_w binom(d(w), 2)`.
    pub fn check_moment(&self) -> f64 {
        moment(&self.rho)
    }

    /// Fraction of variable nodes with degree `degree`.
    pub fn variable_node_fraction(&self, degree: usize) -> f64 {
        node_fraction(&self.lambda, degree)
    }

    pub fn check_node_fraction(&self, degree: usize) -> f64 {
        node_fraction(&self.rho, degree)
    }

    pub fn average_variable_degree(&self) -> f64 {
        1.0 / inverse_mean(&self.lambda)
    }

    pub fn average_check_degree(&self) -> f64 {
        1.0 / inverse_mean(&self.rho)
    }

    pub fn variable_regular_degree(&self) -> Option<usize> {
        match self.variable_degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn biregular_degrees(&self) -> Option<(usize, usize)> {
        match (self.variable_degrees().as_slice(), self.check_degrees().as_slice()) {
            ([dv], [dc]) => Some((*dv, *dc)),
            _ => None,
        }
    }
}

fn support(dist: &DegreeDistribution) -> Vec<usize> {
    dist.iter().filter(|(_, &f)| f > 0.0).map(|(&d, _)| d).collect()
}

fn moment(dist: &DegreeDistribution) -> f64 {
    dist.iter().map(|(&d, &f)| f * (d as f64 - 1.0)).sum()
}

fn inverse_mean(dist: &DegreeDistribution) -> f64 {
    dist.iter().map(|(&d, &f)| f / d as f64).sum()
}

fn node_fraction(dist: &DegreeDistribution, degree: usize) -> f64 {
    match dist.get(&degree) {
        Some(&f) if degree > 0 => (f / degree as f64) / inverse_mean(dist),
        _ => 0.0,
    }
}
