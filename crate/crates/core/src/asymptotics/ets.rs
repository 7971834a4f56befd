use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::forest::forest_partitions;
use super::specht::{specht_ratio, spread};
use super::trees::TreeCountTable;
use super::{ApproxBound, AsymptoticsError};
use crate::combinatorics::multinomial;
use crate::ensemble::{DegreeDistribution, EnsembleSpec};
use crate::scalar::Scalar;

/// How tree appendages of an elementary trapping set are counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EtsMode {
    /// Basic-tree counts `B_{j+1}`.
    #[default]
    ExactB,
    /// Generalized Catalan counts `C_{j+1}`, an upper bound.
    CatalanUpper,
}

/// Girth assumed by the ETS predictors when none is given.
pub const DEFAULT_GIRTH: usize = 6;

/// Expected number of `(a, a(d_v-2))` elementary trapping sets in the
/// `(d_v, d_c)` biregular ensemble with girth `g`.
pub fn ets_expected_biregular<T: Scalar>(
    a: usize,
    d_v: usize,
    d_c: usize,
    g: usize,
    mode: EtsMode,
) -> Result<ApproxBound<T>, AsymptoticsError> {
    check_args(d_v, g)?;
    if d_c < 2 {
        return Err(AsymptoticsError::Domain(format!("d_c must be >= 2, got {d_c}")));
    }
    let id = match mode {
        EtsMode::ExactB => "ets-biregular-basic-trees",
        EtsMode::CatalanUpper => "ets-biregular-catalan-upper",
    };
    if a < 2 {
        return Ok(ApproxBound::zero(id, "elementary sets need a cycle"));
    }
    let cycle = T::from_usize_exact((d_v - 1) * (d_c - 1));
    let tree = T::from_usize_exact(d_c - 1);
    let estimate = ets_sum(a, g, d_v, mode, cycle, tree)?;
    let lower_factor = match mode {
        EtsMode::ExactB => T::one(),
        EtsMode::CatalanUpper => appendage_factor(a, g),
    };
    Ok(ApproxBound::new(estimate, lower_factor, id, ""))
}

/// Variable-regular ensemble with check-degree distribution `rho`
/// (edge perspective).
pub fn ets_expected_variable_regular<T: Scalar>(
    a: usize,
    d_v: usize,
    rho: &DegreeDistribution,
    g: usize,
    mode: EtsMode,
) -> Result<ApproxBound<T>, AsymptoticsError> {
    check_args(d_v, g)?;
    let id = match mode {
        EtsMode::ExactB => "ets-variable-regular-basic-trees",
        EtsMode::CatalanUpper => "ets-variable-regular-catalan-upper",
    };
    let side = CheckSide::new(rho)?;
    if a < 2 {
        return Ok(ApproxBound::zero(id, "elementary sets need a cycle"));
    }
    let cycle = T::from_usize_exact(d_v - 1) * side.moment::<T>();
    let tree = side.average::<T>() - T::one();
    let estimate = ets_sum(a, g, d_v, mode, cycle, tree)?;
    let lower_factor = side.lower_factor(a, g, mode)?;
    Ok(ApproxBound::new(estimate, lower_factor, id, ""))
}

/// Irregular ensemble, class `(a, a(q-2))` with `q = d_vmin >= 3`: cycles
/// through degree-`q` variables with degree-`q` tree appendages.
pub fn ets_expected_irregular_min_b<T: Scalar>(
    a: usize,
    spec: &EnsembleSpec,
    g: usize,
    mode: EtsMode,
) -> Result<ApproxBound<T>, AsymptoticsError> {
    let q = spec.dv_min();
    if q < 3 {
        return Err(AsymptoticsError::Domain(format!(
            "d_vmin = {q} carries no trees; use the LETS predictor for the b floor"
        )));
    }
    check_args(q, g)?;
    let id = match mode {
        EtsMode::ExactB => "ets-irregular-min-b-basic-trees",
        EtsMode::CatalanUpper => "ets-irregular-min-b-catalan-upper",
    };
    let side = CheckSide::new(&spec.rho)?;
    if a < 2 {
        return Ok(ApproxBound::zero(id, "elementary sets need a cycle"));
    }
    let lambda_q = T::from_f64_lossy(spec.lambda(q));
    let p_q = T::from_f64_lossy(spec.variable_node_fraction(q));
    let cycle = lambda_q * T::from_usize_exact(q - 1) * side.moment::<T>();
    let tree = (side.average::<T>() - T::one()) * p_q;
    let estimate = ets_sum(a, g, q, mode, cycle, tree)?;
    let lower_factor = side.lower_factor(a, g, mode)?;
    Ok(ApproxBound::new(estimate, lower_factor, id, ""))
}

fn check_args(d_v: usize, g: usize) -> Result<(), AsymptoticsError> {
    if d_v < 3 {
        return Err(AsymptoticsError::Domain(format!("ETS trees need d_v >= 3, got {d_v}")));
    }
    if g < 4 || !g.is_multiple_of(2) {
        return Err(AsymptoticsError::Domain(format!("girth must be even and >= 4, got {g}")));
    }
    Ok(())
}

// Largest number of tree variables: the cycle keeps at least g/2 variables.
fn max_tree_variables(a: usize, g: usize) -> usize {
    a.saturating_sub(g / 2).min(a.saturating_sub(2))
}

fn appendage_factor<T: Scalar>(a: usize, g: usize) -> T {
    T::from_usize_exact(max_tree_variables(a, g) + 1).powi(-(a as i32))
}

/// `Σ_i cycle^{a-i} / (2(a-i)) · tree^i · Σ_t multinomial(t) Π w_j^{t_j}`
/// with `w_j = B_{j+1}` or `C_{j+1}`.
fn ets_sum<T: Scalar>(
    a: usize,
    g: usize,
    d_v: usize,
    mode: EtsMode,
    cycle: T,
    tree: T,
) -> Result<T, AsymptoticsError> {
    let top = max_tree_variables(a, g);
    let table = TreeCountTable::new(d_v, top)?;
    let mut total = T::zero();
    for i in 0..=top {
        let k = a - i;
        let mut forests = BigUint::from(0u32);
        for part in forest_partitions(a, i) {
            let t: Vec<u64> = part.counts().iter().map(|&x| x as u64).collect();
            let mut term = multinomial(&t);
            for (j, &count) in part.counts().iter().enumerate() {
                let w = match mode {
                    EtsMode::ExactB => table.b(j),
                    EtsMode::CatalanUpper => table.c(j + 1),
                };
                term *= w.pow(count as u32);
            }
            forests += term;
        }
        let cycles = cycle.powi(k as i32) / T::from_usize_exact(2 * k);
        total = total + cycles * tree.powi(i as i32) * T::from_biguint(&forests);
    }
    Ok(total)
}

struct CheckSide<'a> {
    rho: &'a DegreeDistribution,
    d_min: usize,
    d_max: usize,
}

impl<'a> CheckSide<'a> {
    fn new(rho: &'a DegreeDistribution) -> Result<Self, AsymptoticsError> {
        let support: Vec<usize> = rho.iter().filter(|(_, &f)| f > 0.0).map(|(&d, _)| d).collect();
        match (support.first(), support.last()) {
            (Some(&d_min), Some(&d_max)) if d_min >= 2 => Ok(CheckSide { rho, d_min, d_max }),
            _ => Err(AsymptoticsError::Domain(
                "check distribution must be non-empty with degrees >= 2".into(),
            )),
        }
    }

    /// `Σ ρ_j (j-1)`.
    fn moment<T: Scalar>(&self) -> T {
        self.rho
            .iter()
            .map(|(&d, &f)| T::from_f64_lossy(f * (d as f64 - 1.0)))
            .sum()
    }

    /// Node-average check degree `1 / Σ (ρ_j / j)`.
    fn average<T: Scalar>(&self) -> T {
        let inv: T = self.rho.iter().map(|(&d, &f)| T::from_f64_lossy(f / d as f64)).sum();
        inv.recip()
    }

    fn lower_factor<T: Scalar>(&self, a: usize, g: usize, mode: EtsMode) -> Result<T, AsymptoticsError> {
        let s = specht_ratio(spread::<T>(self.d_min, self.d_max)?)?;
        let base = match mode {
            EtsMode::ExactB => s,
            EtsMode::CatalanUpper => s * T::from_usize_exact(max_tree_variables(a, g) + 1),
        };
        Ok(base.powi(-(a as i32)))
    }
}
