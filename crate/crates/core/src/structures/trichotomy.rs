use serde::Serialize;

use super::{Category, StructureError};
use crate::ensemble::EnsembleSpec;

/// Joint asymptotic behavior of all structures in an `(a, b)` class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassBehavior {
    /// No structure of this category has these parameters.
    Impossible,
    AllZero,
    /// Structures in the class disagree; the surviving ones tend to a constant.
    Mixed,
    AllConstant,
    AllInfinity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub behavior: ClassBehavior,
    /// All non-isomorphic structures in the class share one verdict.
    pub consistent: bool,
    /// Shape of the structures with constant multiplicity, when there are any.
    pub witness: Option<String>,
    pub reason: String,
}

impl ClassVerdict {
    fn new(behavior: ClassBehavior, reason: impl Into<String>) -> Self {
        ClassVerdict {
            behavior,
            consistent: behavior != ClassBehavior::Mixed,
            witness: None,
            reason: reason.into(),
        }
    }

    fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

use ClassBehavior::*;

/// Asymptotic verdict for a whole `(a, b)` class of `category` in the
/// ensemble `spec`.
///
/// Variable-regular ensembles get the exact verdict keyed on the sign of
/// `b/a - (d_v - 2)`; irregular ensembles get `Mixed` wherever structures of
/// different degree compositions behave differently.
pub fn class_trichotomy(
    category: Category,
    a: usize,
    b: usize,
    spec: &EnsembleSpec,
) -> Result<ClassVerdict, StructureError> {
    if category == Category::Ts {
        return Err(StructureError::Unsupported(category));
    }
    if a == 0 {
        return Ok(ClassVerdict::new(Impossible, "a structure has at least one variable"));
    }
    Ok(match spec.variable_regular_degree() {
        Some(dv) => regular(category, a, b, dv),
        None => irregular(category, a, b, spec),
    })
}

fn cycle_witness(a: usize) -> String {
    format!("simple {}-cycle", 2 * a)
}

fn regular(category: Category, a: usize, b: usize, dv: usize) -> ClassVerdict {
    let total = a * dv;
    if b % 2 != total % 2 {
        return ClassVerdict::new(Impossible, format!("b must have the parity of a*d_v = {total}"));
    }
    if b > total {
        return ClassVerdict::new(Impossible, format!("b exceeds a*d_v = {total}"));
    }
    // Compare b with the cycle value a(d_v - 2) without going negative.
    let threshold = a * dv.saturating_sub(2);
    let sign = (b + 2 * a).cmp(&total);
    let cycle_ok = dv >= 2;
    match category {
        Category::Ets => {
            if a == 1 && b != dv {
                return ClassVerdict::new(Impossible, "a single variable has only degree-1 checks");
            }
            match sign {
                std::cmp::Ordering::Less => ClassVerdict::new(AllZero, "b/a < d_v - 2: every ETS has |V| < |E|"),
                std::cmp::Ordering::Equal => ClassVerdict::new(AllConstant, "b/a = d_v - 2: every ETS has |V| = |E|")
                    .with_witness(format!("{} with tree appendages", cycle_witness(a))),
                std::cmp::Ordering::Greater => ClassVerdict::new(AllInfinity, "b/a > d_v - 2: every ETS has |V| > |E|"),
            }
        }
        Category::Lets => {
            if a < 2 || !cycle_ok {
                return ClassVerdict::new(Impossible, "a LETS needs at least two variables of degree >= 2");
            }
            match sign {
                std::cmp::Ordering::Less => ClassVerdict::new(AllZero, "b/a < d_v - 2: every LETS has |V| < |E|"),
                std::cmp::Ordering::Equal => ClassVerdict::new(AllConstant, "only chordless cycles survive")
                    .with_witness(format!("chordless {}", cycle_witness(a))),
                std::cmp::Ordering::Greater => {
                    ClassVerdict::new(Impossible, format!("a LETS has b <= a(d_v - 2) = {threshold}"))
                }
            }
        }
        Category::Abs | Category::Eabs => {
            let bound = a * (dv.div_ceil(2).saturating_sub(1));
            if a < 2 || b > bound {
                return ClassVerdict::new(Impossible, format!("an ABS has b <= a(ceil(d_v/2) - 1) = {bound}"));
            }
            match (dv, sign) {
                (2, _) if category == Category::Eabs => ClassVerdict::new(AllConstant, "elementary, all checks of degree 2")
                    .with_witness(cycle_witness(a)),
                (2, _) => ClassVerdict::new(Mixed, "simple cycles are constant, cycles sharing a check vanish")
                    .with_witness(cycle_witness(a)),
                (3, std::cmp::Ordering::Equal) if category == Category::Eabs => {
                    ClassVerdict::new(AllConstant, "elementary with b = a(d_v - 2)").with_witness(cycle_witness(a))
                }
                (3, std::cmp::Ordering::Equal) => {
                    ClassVerdict::new(Mixed, "elementary members are constant, the rest vanish")
                        .with_witness(cycle_witness(a))
                }
                _ => ClassVerdict::new(AllZero, "every ABS in this class has |V| < |E|"),
            }
        }
        Category::Ss => {
            if a < 2 || 3 * b > total {
                return ClassVerdict::new(Impossible, "an SS has every check of degree >= 2, so 3b <= a*d_v");
            }
            match (dv, b) {
                (2, 0) => ClassVerdict::new(Mixed, "simple cycles are constant, the rest vanish")
                    .with_witness(cycle_witness(a)),
                _ => ClassVerdict::new(AllZero, "every SS in this class has |V| < |E|"),
            }
        }
        Category::Ts => unreachable!(),
    }
}

fn irregular(category: Category, a: usize, b: usize, spec: &EnsembleSpec) -> ClassVerdict {
    let q = spec.dv_min();
    let dmax = spec.dv_max();
    if b > a * dmax {
        return ClassVerdict::new(Impossible, format!("b exceeds a*d_vmax = {}", a * dmax));
    }
    // Exponent |V| - |E| = a + (b - Σd)/2 for elementary structures.
    let lo = a * q.saturating_sub(2);
    let hi = a * dmax.saturating_sub(2);
    match category {
        Category::Ets => {
            if b + 2 * a < a * q {
                ClassVerdict::new(AllZero, "b < a(d_vmin - 2): every ETS has |V| < |E|")
            } else if b > hi {
                ClassVerdict::new(AllInfinity, "b > a(d_vmax - 2): every ETS has |V| > |E|")
            } else {
                ClassVerdict::new(Mixed, "verdict depends on the degree composition")
                    .with_witness(format!("{} with tree appendages and degree sum 2a + b", cycle_witness(a)))
            }
        }
        Category::Lets => {
            if a < 2 || q < 2 {
                ClassVerdict::new(Impossible, "a LETS needs at least two variables of degree >= 2")
            } else if b < lo {
                ClassVerdict::new(AllZero, "b < a(d_vmin - 2): every LETS has |V| < |E|")
            } else if b > hi {
                ClassVerdict::new(Impossible, format!("a LETS has b <= a(d_vmax - 2) = {hi}"))
            } else {
                ClassVerdict::new(Mixed, "chordless cycles with degree sum 2a + b survive, the rest vanish")
                    .with_witness(format!("chordless {} with degree sum {}", cycle_witness(a), 2 * a + b))
            }
        }
        Category::Abs | Category::Eabs => {
            let bound = a * (dmax.div_ceil(2).saturating_sub(1));
            if a < 2 || b > bound {
                return ClassVerdict::new(Impossible, format!("an ABS has b <= a(ceil(d_vmax/2) - 1) = {bound}"));
            }
            let survives = match q {
                2 => b == 0 || (b <= a && spec.lambda(3) > 0.0),
                3 => b == a,
                _ => false,
            };
            if survives {
                ClassVerdict::new(Mixed, "cycles of degree-2 and degree-3 variables survive, the rest vanish")
                    .with_witness(cycle_witness(a))
            } else {
                ClassVerdict::new(AllZero, "every ABS in this class has |V| < |E|")
            }
        }
        Category::Ss => {
            if a < 2 || 3 * b > a * dmax {
                ClassVerdict::new(Impossible, "an SS has every check of degree >= 2, so 3b <= Σd")
            } else if q == 2 && b == 0 {
                ClassVerdict::new(Mixed, "cycles of degree-2 variables survive, the rest vanish")
                    .with_witness(cycle_witness(a))
            } else {
                ClassVerdict::new(AllZero, "every SS in this class has |V| < |E|")
            }
        }
        Category::Ts => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn reg(dv: usize) -> EnsembleSpec {
        EnsembleSpec::biregular(dv, 2 * dv, 100).unwrap()
    }

    #[test]
    fn regular_examples() {
        assert_eq!(class_trichotomy(Category::Ets, 2, 4, &reg(3)).unwrap().behavior, AllInfinity);
        assert_eq!(class_trichotomy(Category::Lets, 4, 6, &reg(3)).unwrap().behavior, Impossible);
        assert_eq!(class_trichotomy(Category::Abs, 3, 4, &reg(4)).unwrap().behavior, Impossible);
        let v = class_trichotomy(Category::Lets, 4, 4, &reg(3)).unwrap();
        assert_eq!(v.behavior, AllConstant);
        assert_eq!(v.witness.as_deref(), Some("chordless simple 8-cycle"));
        assert_eq!(class_trichotomy(Category::Lets, 4, 2, &reg(3)).unwrap().behavior, AllZero);
        assert_eq!(class_trichotomy(Category::Abs, 4, 4, &reg(3)).unwrap().behavior, Mixed);
        assert_eq!(class_trichotomy(Category::Eabs, 4, 4, &reg(3)).unwrap().behavior, AllConstant);
        assert!(class_trichotomy(Category::Ts, 4, 4, &reg(3)).is_err());
    }

    #[test]
    fn irregular_is_mixed_in_the_window() {
        let spec = EnsembleSpec::new(BTreeMap::from([(3, 0.5), (4, 0.5)]), BTreeMap::from([(7, 1.0)]), 100).unwrap();
        assert_eq!(class_trichotomy(Category::Lets, 3, 4, &spec).unwrap().behavior, Mixed);
        assert_eq!(class_trichotomy(Category::Lets, 3, 2, &spec).unwrap().behavior, AllZero);
        assert_eq!(class_trichotomy(Category::Lets, 3, 7, &spec).unwrap().behavior, Impossible);
        assert_eq!(class_trichotomy(Category::Ets, 3, 7, &spec).unwrap().behavior, AllInfinity);
        assert!(!class_trichotomy(Category::Ets, 3, 4, &spec).unwrap().consistent);
    }
}
