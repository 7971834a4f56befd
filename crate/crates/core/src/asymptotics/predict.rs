use super::classes::{abs_expected, lets_expected, ss_expected_a0};
use super::ets::{
    ets_expected_biregular, ets_expected_irregular_min_b, ets_expected_variable_regular, EtsMode,
};
use super::{ApproxBound, AsymptoticsError};
use crate::ensemble::EnsembleSpec;
use crate::scalar::Scalar;
use crate::structures::{class_trichotomy, Category, ClassBehavior};

/// Asymptotic expected multiplicity of the `(a, b)` class of `category`.
///
/// Vanishing and impossible classes give an estimate of 0, diverging classes
/// give `+∞`. Irregular ETS classes strictly between the two `b` extremes
/// have no closed form and give [`AsymptoticsError::Unsupported`].
pub fn predict<T: Scalar>(
    spec: &EnsembleSpec,
    category: Category,
    a: usize,
    b: usize,
    g: usize,
    mode: EtsMode,
) -> Result<ApproxBound<T>, AsymptoticsError> {
    let unsupported = |reason: String| AsymptoticsError::Unsupported { category, a, b, reason };
    let verdict = class_trichotomy(category, a, b, spec).map_err(|e| unsupported(e.to_string()))?;
    match verdict.behavior {
        ClassBehavior::Impossible => return Ok(ApproxBound::zero("class-impossible", verdict.reason)),
        ClassBehavior::AllZero => return Ok(ApproxBound::zero("class-vanishing", verdict.reason)),
        ClassBehavior::AllInfinity => return Ok(ApproxBound::infinite("class-diverging", verdict.reason)),
        ClassBehavior::Mixed | ClassBehavior::AllConstant => {}
    }
    match category {
        Category::Lets => lets_expected(spec, a, b),
        Category::Abs | Category::Eabs => abs_expected(spec, a, b),
        Category::Ss => ss_expected_a0(spec, a),
        Category::Ets => {
            let q = spec.dv_min();
            if q == 2 && b == 0 {
                // Degree-2 variables cannot root trees: only bare cycles remain.
                return lets_expected(spec, a, 0);
            }
            if let Some((dv, dc)) = spec.biregular_degrees() {
                return ets_expected_biregular(a, dv, dc, g, mode);
            }
            if let Some(dv) = spec.variable_regular_degree() {
                return ets_expected_variable_regular(a, dv, &spec.rho, g, mode);
            }
            if b == a * q.saturating_sub(2) {
                return ets_expected_irregular_min_b(a, spec, g, mode);
            }
            Err(unsupported(
                "irregular ETS classes above the minimum b have no closed form".into(),
            ))
        }
        Category::Ts => Err(unsupported("no class-level formula for general trapping sets".into())),
    }
}
