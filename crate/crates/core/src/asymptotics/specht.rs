use super::AsymptoticsError;
use crate::scalar::Scalar;

/// Specht's ratio `S(h) = (h-1) h^{1/(h-1)} / (e ln h)`, with `S(1) = 1`.
///
/// Close to `h = 1` the direct form cancels catastrophically, so a short
/// series `exp(ε²/8 - ε³/8)` in `ε = h - 1` is used instead.
pub fn specht_ratio<T: Scalar>(h: T) -> Result<T, AsymptoticsError> {
    if h.is_nan() || h < T::one() {
        return Err(AsymptoticsError::Domain(format!(
            "Specht ratio needs h >= 1, got {h}"
        )));
    }
    if h.is_infinite() {
        return Ok(T::infinity());
    }
    let eps = h - T::one();
    let cutoff = if T::epsilon() > T::from_f64_lossy(1e-10) { 1e-2 } else { 1e-4 };
    if eps < T::from_f64_lossy(cutoff) {
        let eight = T::from_f64_lossy(8.0);
        let eps2 = eps * eps;
        return Ok((eps2 / eight - eps2 * eps / eight).exp());
    }
    Ok(eps * h.powf(eps.recip()) / (T::E() * h.ln()))
}

/// Degree-spread ratio `d_max(d_max-1) / (d_min(d_min-1))` used as the Specht
/// argument for one side of the graph.
pub(crate) fn spread<T: Scalar>(d_min: usize, d_max: usize) -> Result<T, AsymptoticsError> {
    if d_min < 2 {
        return Err(AsymptoticsError::Domain(format!(
            "degree spread needs minimum degree >= 2, got {d_min}"
        )));
    }
    let f = |d: usize| T::from_usize_exact(d * (d - 1));
    Ok(f(d_max) / f(d_min))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::excessive_precision)]
    fn reference_values() {
        let cases = [
            (21.0, 2.814020775242063844),
            (1.4, 1.014229792489091184),
            (3.0, 1.159983171026548649),
            (6.0, 1.469014437851452760),
            (2.0, 1.061475690846085977),
            (1.001, 1.000000124875120544),
        ];
        for (h, want) in cases {
            let got: f64 = specht_ratio(h).unwrap();
            assert!((got - want).abs() < 1e-12 * want, "S({h}) = {got}");
        }
        assert_eq!(specht_ratio(1.0f64).unwrap(), 1.0);
        assert!((specht_ratio(1.0f64 + 1e-8).unwrap() - 1.0).abs() < 1e-9);
        assert!(specht_ratio(0.5f64).is_err());
        let s32: f32 = specht_ratio(21.0f32).unwrap();
        assert!((s32 - 2.814_020_8).abs() < 1e-5);
    }

    #[test]
    fn monotone_on_grid() {
        let mut prev = 1.0f64;
        for k in 0..4000 {
            let h = 1.0 + k as f64 * 0.005;
            let s = specht_ratio(h).unwrap();
            assert!(s >= 1.0 && s >= prev - 1e-15, "h = {h}");
            prev = s;
        }
    }
}
