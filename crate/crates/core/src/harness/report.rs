use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use super::{HarnessError, TolerancePolicy};
use crate::asymptotics::ApproxBound;
use crate::structures::Category;

pub type ClassKey = (Category, usize, usize);

/// Per-trial counts of one class at one block length.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassSample {
    pub n: usize,
    pub trials: usize,
    pub mean: f64,
    pub sd: f64,
}

impl ClassSample {
    /// Mean and sample standard deviation of `counts` by two passes.
    pub fn from_counts(n: usize, counts: &[f64]) -> Self {
        let trials = counts.len();
        if trials == 0 {
            return ClassSample { n, trials, mean: f64::NAN, sd: f64::NAN };
        }
        let mean = counts.iter().sum::<f64>() / trials as f64;
        let sd = if trials > 1 {
            let ss: f64 = counts.iter().map(|x| (x - mean) * (x - mean)).sum();
            (ss / (trials - 1) as f64).sqrt()
        } else {
            0.0
        };
        ClassSample { n, trials, mean, sd }
    }

    pub fn standard_error(&self) -> f64 {
        if self.trials == 0 {
            return f64::NAN;
        }
        self.sd / (self.trials as f64).sqrt()
    }
}

/// Empirical statistics per class, one entry per block length of the sweep.
pub type Empirical = BTreeMap<ClassKey, Vec<ClassSample>>;
pub type Predicted = BTreeMap<ClassKey, ApproxBound<f64>>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub category: Category,
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub trials: usize,
    pub mean: f64,
    pub sd: f64,
    pub estimate: f64,
    pub lower_factor: f64,
    /// `(mean - estimate) / standard error`.
    pub discrepancy: f64,
    pub pass: bool,
}

/// Compare empirical class statistics with predictions.
///
/// A class missing on one side counts as zero there. Rows with a positive
/// finite estimate pass within `max(tol * estimate, 3 se)`. Rows predicted to
/// vanish pass when the means do not increase along the sweep, or with a
/// single block length when the mean is within `3 se` of zero. Diverging or
/// unavailable predictions are reported but always pass.
pub fn compare(empirical: &Empirical, predicted: &Predicted, policy: &TolerancePolicy) -> Vec<ComparisonRow> {
    let sweep: BTreeSet<(usize, usize)> = empirical
        .values()
        .flatten()
        .map(|s| (s.n, s.trials))
        .collect();
    let keys: BTreeSet<ClassKey> = empirical.keys().chain(predicted.keys()).copied().collect();
    let mut rows = Vec::new();
    for key in keys {
        let (category, a, b) = key;
        let samples: Vec<ClassSample> = match empirical.get(&key) {
            Some(s) => s.clone(),
            None => sweep
                .iter()
                .map(|&(n, trials)| ClassSample { n, trials, mean: 0.0, sd: 0.0 })
                .collect(),
        };
        let bound = predicted
            .get(&key)
            .cloned()
            .unwrap_or_else(|| ApproxBound::zero("not-predicted", "no prediction for this class"));
        let estimate = bound.estimate;
        let nonincreasing = samples.windows(2).all(|w| w[1].mean <= w[0].mean);
        for s in samples.iter() {
            let se = s.standard_error();
            let diff = s.mean - estimate;
            let discrepancy = if se > 0.0 {
                diff / se
            } else if diff == 0.0 {
                0.0
            } else {
                diff.signum() * f64::INFINITY
            };
            let pass = if !estimate.is_finite() {
                true
            } else if estimate > 0.0 {
                diff.abs() <= (policy.relative_for(category) * estimate).max(3.0 * se)
            } else if samples.len() > 1 {
                nonincreasing
            } else {
                s.mean.abs() <= 3.0 * se
            };
            rows.push(ComparisonRow {
                category,
                a,
                b,
                n: s.n,
                trials: s.trials,
                mean: s.mean,
                sd: s.sd,
                estimate,
                lower_factor: bound.lower_factor,
                discrepancy,
                pass,
            });
        }
    }
    rows
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(HarnessError::InvalidConfig(format!("unknown report format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FailedTrial {
    pub n: usize,
    pub trial: usize,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportMetadata {
    pub seed: u64,
    pub sweep: Vec<usize>,
    pub trials: usize,
    pub girth_min: Option<usize>,
    pub failure_policy: String,
    pub failed_trials: Vec<FailedTrial>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub metadata: ReportMetadata,
    pub rows: Vec<ComparisonRow>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ComparisonRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn row(&self, category: Category, a: usize, b: usize, n: usize) -> Option<&ComparisonRow> {
        self.rows
            .iter()
            .find(|r| r.category == category && r.a == a && r.b == b && r.n == n)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("category,a,b,n,trials,mean,sd,estimate,lower_factor,discrepancy,pass\n");
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                r.category, r.a, r.b, r.n, r.trials, r.mean, r.sd, r.estimate, r.lower_factor, r.discrepancy, r.pass
            )
            .unwrap();
        }
        out
    }

    /// Non-finite numbers become `null`.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Json => self.to_json(),
        }
    }
}

pub fn emit_report(report: &Report, format: ReportFormat, path: &Path) -> Result<(), HarnessError> {
    std::fs::write(path, report.render(format)).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })
}
