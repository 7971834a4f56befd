use std::collections::BTreeMap;

use serde::Serialize;

use super::specht::{specht_ratio, spread};
use super::{ApproxBound, AsymptoticsError};
use crate::combinatorics::multinomial;
use crate::ensemble::EnsembleSpec;
use crate::scalar::Scalar;

/// Degree signature of a cycle of length `c`: `alpha[i]` of its `c/2`
/// variables must have degree `i`, `alpha_free` are unconstrained, and
/// likewise `beta`/`beta_free` for its checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSignature {
    pub c: usize,
    pub alpha: BTreeMap<usize, usize>,
    pub alpha_free: usize,
    pub beta: BTreeMap<usize, usize>,
    pub beta_free: usize,
}

impl CycleSignature {
    pub fn new(
        c: usize,
        alpha: BTreeMap<usize, usize>,
        alpha_free: usize,
        beta: BTreeMap<usize, usize>,
        beta_free: usize,
    ) -> Result<Self, AsymptoticsError> {
        let sig = CycleSignature { c, alpha, alpha_free, beta, beta_free };
        sig.validate()?;
        Ok(sig)
    }

    /// No constraint on either side.
    pub fn free(c: usize) -> Result<Self, AsymptoticsError> {
        Self::new(c, BTreeMap::new(), c / 2, BTreeMap::new(), c / 2)
    }

    pub fn validate(&self) -> Result<(), AsymptoticsError> {
        if self.c < 4 || !self.c.is_multiple_of(2) {
            return Err(AsymptoticsError::InvalidSignature(format!(
                "cycle length must be even and >= 4, got {}",
                self.c
            )));
        }
        let half = self.c / 2;
        let va: usize = self.alpha.values().sum::<usize>() + self.alpha_free;
        let vb: usize = self.beta.values().sum::<usize>() + self.beta_free;
        if va != half || vb != half {
            return Err(AsymptoticsError::InvalidSignature(format!(
                "variable slots {va} and check slots {vb} must both equal c/2 = {half}"
            )));
        }
        Ok(())
    }
}

/// Asymptotic expected number of `c`-cycles, `(m_v m_c)^{c/2} / c` with the
/// edge-perspective moments `m_v = Σ λ_i (i-1)`, `m_c = Σ ρ_j (j-1)`.
///
/// Zero for odd `c` or `c < 4`.
pub fn expected_cycles<T: Scalar>(spec: &EnsembleSpec, c: usize) -> T {
    if c < 4 || !c.is_multiple_of(2) {
        return T::zero();
    }
    let m = T::from_f64_lossy(spec.variable_moment()) * T::from_f64_lossy(spec.check_moment());
    m.powi((c / 2) as i32) / T::from_usize_exact(c)
}

/// Expected number of `c`-cycles with exactly the degrees in `sig`, which
/// must have no free slots.
pub fn expected_cycles_with_signature<T: Scalar>(
    spec: &EnsembleSpec,
    sig: &CycleSignature,
) -> Result<T, AsymptoticsError> {
    sig.validate()?;
    if sig.alpha_free != 0 || sig.beta_free != 0 {
        return Err(AsymptoticsError::InvalidSignature(
            "exact signature must not have free slots".into(),
        ));
    }
    Ok(signature_estimate(spec, sig))
}

/// Expected number of `c`-cycles with at least the degrees in `sig`.
///
/// Exact when there are no free slots; otherwise the true value lies within
/// `S(h_u)^{-α'} S(h_w)^{-β'}` of the estimate.
pub fn expected_cycles_partial_signature<T: Scalar>(
    spec: &EnsembleSpec,
    sig: &CycleSignature,
) -> Result<ApproxBound<T>, AsymptoticsError> {
    sig.validate()?;
    let estimate = signature_estimate(spec, sig);
    let lower_factor = free_slot_factor(spec, sig.alpha_free, sig.beta_free)?;
    let formula_id = if sig.alpha_free == 0 && sig.beta_free == 0 {
        "cycles-exact-signature"
    } else {
        "cycles-partial-signature"
    };
    Ok(ApproxBound::new(estimate, lower_factor, formula_id, ""))
}

/// `S(h_u)^{-α'} S(h_w)^{-β'}`; a side with no free slots contributes 1.
pub(crate) fn free_slot_factor<T: Scalar>(
    spec: &EnsembleSpec,
    alpha_free: usize,
    beta_free: usize,
) -> Result<T, AsymptoticsError> {
    let mut factor = T::one();
    if alpha_free > 0 {
        let s = specht_ratio(spread::<T>(spec.dv_min(), spec.dv_max())?)?;
        factor = factor * s.powi(-(alpha_free as i32));
    }
    if beta_free > 0 {
        let s = specht_ratio(spread::<T>(spec.dc_min(), spec.dc_max())?)?;
        factor = factor * s.powi(-(beta_free as i32));
    }
    Ok(factor)
}

fn signature_estimate<T: Scalar>(spec: &EnsembleSpec, sig: &CycleSignature) -> T {
    let side = |fixed: &BTreeMap<usize, usize>, free: usize, weight: &dyn Fn(usize) -> f64, moment: f64| {
        let mut parts: Vec<u64> = fixed.values().map(|&k| k as u64).collect();
        parts.push(free as u64);
        let mut value = T::from_biguint(&multinomial(&parts));
        for (&degree, &count) in fixed {
            let w = T::from_f64_lossy(weight(degree) * degree.saturating_sub(1) as f64);
            value = value * w.powi(count as i32);
        }
        value * T::from_f64_lossy(moment).powi(free as i32)
    };
    let v = side(&sig.alpha, sig.alpha_free, &|d| spec.lambda(d), spec.variable_moment());
    let w = side(&sig.beta, sig.beta_free, &|d| spec.rho(d), spec.check_moment());
    v * w / T::from_usize_exact(sig.c)
}

