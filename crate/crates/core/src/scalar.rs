//! Floating-point scalar abstraction for the asymptotic predictors.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_bigint::BigUint;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar used by every closed-form predictor: `f32` or `f64`.
///
/// Exact integer quantities (binomials, generalized Catalan numbers, tree
/// counts) are kept as [`BigUint`] and only converted at the last step via
/// [`Scalar::from_biguint`].
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    fn from_usize_exact(value: usize) -> Self {
        Self::from_usize(value).expect("usize is representable as a float")
    }

    fn from_f64_lossy(value: f64) -> Self {
        Self::from_f64(value).expect("f64 is representable as a float")
    }

    fn from_biguint(value: &BigUint) -> Self {
        // Values above f64::MAX saturate to infinity, which is what callers want.
        Self::from_f64_lossy(value.to_f64().unwrap_or(f64::INFINITY))
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn biguint_conversion() {
        let big = BigUint::from(10u32).pow(20);
        assert_eq!(f64::from_biguint(&big), 1e20);
        assert_eq!(f32::from_biguint(&BigUint::from(7u32)), 7.0);
        let huge = BigUint::from(10u32).pow(400);
        assert!(f64::from_biguint(&huge).is_infinite());
    }
}
