use std::collections::BTreeMap;

use super::cycles::{expected_cycles_partial_signature, free_slot_factor, CycleSignature};
use super::{ApproxBound, AsymptoticsError};
use crate::combinatorics::weak_compositions;
use crate::ensemble::EnsembleSpec;
use crate::scalar::Scalar;

/// Expected number of `(a, 0)` stopping sets: cycles of length `2a` through
/// degree-2 variables only.
pub fn ss_expected_a0<T: Scalar>(
    spec: &EnsembleSpec,
    a: usize,
) -> Result<ApproxBound<T>, AsymptoticsError> {
    const ID: &str = "ss-degree2-cycles";
    if a < 2 {
        return Ok(ApproxBound::zero(ID, "stopping sets need at least two variables"));
    }
    if spec.lambda(2) <= 0.0 {
        return Ok(ApproxBound::zero(ID, "no degree-2 variables, class vanishes"));
    }
    degree_cycles(spec, a, &[(2, a)], ID)
}

/// Expected number of `(a, b)` absorbing sets for `d_vmin` in `{2, 3}`;
/// zero whenever every structure of the class vanishes.
pub fn abs_expected<T: Scalar>(
    spec: &EnsembleSpec,
    a: usize,
    b: usize,
) -> Result<ApproxBound<T>, AsymptoticsError> {
    let q = spec.dv_min();
    if q < 2 {
        return Err(AsymptoticsError::Domain(
            "absorbing-set predictor needs d_vmin >= 2".into(),
        ));
    }
    if a < 2 {
        return Ok(ApproxBound::zero("abs-impossible", "absorbing sets with one variable are isolated"));
    }
    match q {
        2 if b <= a => degree_cycles(spec, a, &[(2, a - b), (3, b)], "abs-degree23-cycles"),
        2 => Ok(ApproxBound::zero("abs-degree23-cycles", "b > a leaves no constant-multiplicity structure")),
        3 if b == a => degree_cycles(spec, a, &[(3, a)], "abs-degree3-cycles"),
        3 => Ok(ApproxBound::zero("abs-degree3-cycles", "only (a, a) classes survive when d_vmin = 3")),
        _ => Ok(ApproxBound::zero("abs-vanishing", "all absorbing-set classes vanish when d_vmin >= 4")),
    }
}

/// Expected number of `(a, b)` leafless elementary trapping sets: simple
/// `2a`-cycles whose variable degrees add up to `2a + b`, summed over every
/// variable-degree composition with the check degrees left free.
pub fn lets_expected<T: Scalar>(
    spec: &EnsembleSpec,
    a: usize,
    b: usize,
) -> Result<ApproxBound<T>, AsymptoticsError> {
    const ID: &str = "lets-cycle-composition";
    if a < 2 {
        return Ok(ApproxBound::zero(ID, "leafless sets need a cycle"));
    }
    let degrees: Vec<usize> = spec.variable_degrees().into_iter().filter(|&d| d >= 2).collect();
    let target = 2 * a + b;
    let mut estimate = T::zero();
    let mut terms = 0usize;
    for alpha in weak_compositions(a, degrees.len()) {
        let sum: usize = alpha.iter().zip(&degrees).map(|(k, d)| k * d).sum();
        if sum != target {
            continue;
        }
        let fixed: Vec<(usize, usize)> = degrees.iter().copied().zip(alpha).collect();
        estimate = estimate + degree_cycles::<T>(spec, a, &fixed, ID)?.estimate;
        terms += 1;
    }
    if terms == 0 {
        return Ok(ApproxBound::zero(ID, format!("no degree composition reaches 2a + b = {target}")));
    }
    let lower_factor = free_slot_factor(spec, 0, a)?;
    Ok(ApproxBound::new(estimate, lower_factor, ID, ""))
}

// 2a-cycles with the given variable-degree counts and unconstrained checks.
fn degree_cycles<T: Scalar>(
    spec: &EnsembleSpec,
    a: usize,
    fixed: &[(usize, usize)],
    id: &'static str,
) -> Result<ApproxBound<T>, AsymptoticsError> {
    let alpha: BTreeMap<usize, usize> = fixed.iter().copied().filter(|&(_, k)| k > 0).collect();
    let sig = CycleSignature::new(2 * a, alpha, 0, BTreeMap::new(), a)?;
    let mut bound = expected_cycles_partial_signature(spec, &sig)?;
    bound.formula_id = id;
    Ok(bound)
}
