use std::collections::BTreeMap;

use proptest::prelude::*;
use trapset::asymptotics::*;
use trapset::ensemble::EnsembleSpec;
use trapset::structures::{class_trichotomy, Category, ClassBehavior};

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

fn two_degree(x: f64, d1: usize, d2: usize, rho: BTreeMap<usize, f64>) -> EnsembleSpec {
    EnsembleSpec::new(BTreeMap::from([(d1, x), (d2, 1.0 - x)]), rho, 1000).unwrap()
}

#[test]
fn lets_sums_to_cycle_count() {
    let spec = two_degree(0.4286, 3, 4, BTreeMap::from([(7, 1.0)]));
    for a in 3..=6 {
        let total: f64 = (0..=2 * a).map(|b| lets_expected::<f64>(&spec, a, b).unwrap().estimate).sum();
        assert!(rel(total, expected_cycles(&spec, 2 * a)) < 1e-9, "a = {a}");
    }
}

#[test]
fn catalan_recursion_matches_closed_form() {
    for dv in 3..=6 {
        let rec = catalan_recursive(12, dv);
        for (j, value) in rec.iter().enumerate() {
            assert_eq!(value, &catalan_general(j, dv), "d_v = {dv}, j = {j}");
        }
    }
}

#[test]
fn signature_reductions() {
    for (dv, dc) in [(3, 6), (4, 8), (3, 5), (5, 10)] {
        let spec = EnsembleSpec::biregular(dv, dc, 1000).unwrap();
        for c in (4..=14).step_by(2) {
            let half = c / 2;
            let closed = (((dv - 1) * (dc - 1)) as f64).powi(half as i32) / c as f64;
            let sig = CycleSignature::new(c, BTreeMap::from([(dv, half)]), 0, BTreeMap::from([(dc, half)]), 0).unwrap();
            assert!(rel(expected_cycles_with_signature::<f64>(&spec, &sig).unwrap(), closed) < 1e-12);
            assert!(rel(expected_cycles::<f64>(&spec, c), closed) < 1e-12);
        }
    }
    let spec = EnsembleSpec::new(
        BTreeMap::from([(2, 0.2), (3, 0.5), (5, 0.3)]),
        BTreeMap::from([(6, 0.4), (8, 0.6)]),
        1000,
    )
    .unwrap();
    for c in (4..=12).step_by(2) {
        let free = expected_cycles_partial_signature::<f64>(&spec, &CycleSignature::free(c).unwrap()).unwrap();
        assert!(rel(free.estimate, expected_cycles(&spec, c)) < 1e-12);
    }
}

#[test]
fn lets_zero_matches_trichotomy_on_regular_specs() {
    for (dv, dc) in [(3, 6), (4, 8), (5, 10)] {
        let spec = EnsembleSpec::biregular(dv, dc, 1000).unwrap();
        for a in 1..=7 {
            for b in 0..=a * dv {
                let est = lets_expected::<f64>(&spec, a, b).unwrap().estimate;
                let behavior = class_trichotomy(Category::Lets, a, b, &spec).unwrap().behavior;
                let vanishes = matches!(behavior, ClassBehavior::AllZero | ClassBehavior::Impossible);
                assert_eq!(est == 0.0, vanishes, "({a},{b}) in ({dv},{dc})");
            }
        }
    }
}

#[test]
fn predictions_follow_class_verdicts() {
    let spec = EnsembleSpec::biregular(3, 6, 1000).unwrap();
    let p = |c, a, b| predict::<f64>(&spec, c, a, b, 6, EtsMode::ExactB).unwrap();
    assert!((p(Category::Lets, 5, 5).estimate - 10000.0).abs() < 1e-6);
    assert!((p(Category::Ets, 4, 4).estimate - 3750.0).abs() < 1e-6);
    assert!(p(Category::Ets, 2, 4).estimate.is_infinite());
    assert_eq!(p(Category::Ets, 4, 2).estimate, 0.0);
    assert_eq!(p(Category::Ss, 4, 0).estimate, 0.0);
    assert!((p(Category::Eabs, 3, 3).estimate - 1000.0 / 6.0).abs() < 1e-9);
    assert!(predict::<f64>(&spec, Category::Ts, 3, 3, 6, EtsMode::ExactB).is_err());

    let irregular = two_degree(0.4286, 3, 4, BTreeMap::from([(7, 1.0)]));
    let ets = predict::<f64>(&irregular, Category::Ets, 4, 4, 6, EtsMode::ExactB).unwrap();
    assert!((ets.estimate - 291.5).abs() / 291.5 < 5e-3);
    let err = predict::<f64>(&irregular, Category::Ets, 4, 5, 6, EtsMode::ExactB).unwrap_err();
    assert!(matches!(err, AsymptoticsError::Unsupported { .. }));
}

#[test]
fn single_precision_agrees() {
    let spec = two_degree(0.4286, 3, 4, BTreeMap::from([(7, 1.0)]));
    for b in 3..=6 {
        let x = lets_expected::<f64>(&spec, 3, b).unwrap().estimate;
        let y = lets_expected::<f32>(&spec, 3, b).unwrap().estimate as f64;
        assert!(rel(y, x) < 1e-5);
    }
    let x = ets_expected_biregular::<f32>(5, 4, 8, 6, EtsMode::ExactB).unwrap().estimate as f64;
    assert!(rel(x, 4265616.5) < 1e-5);
}

proptest! {
    #[test]
    fn lets_identity_for_any_two_degree_mix(x in 0.05f64..0.95, d1 in 2usize..5, gap in 1usize..3, dc in 4usize..9, a in 2usize..7) {
        let spec = two_degree(x, d1, d1 + gap, BTreeMap::from([(dc, 1.0)]));
        let total: f64 = (0..=a * (d1 + gap)).map(|b| lets_expected::<f64>(&spec, a, b).unwrap().estimate).sum();
        prop_assert!(rel(total, expected_cycles(&spec, 2 * a)) < 1e-9);
    }

    #[test]
    fn bounds_are_ordered(x in 0.05f64..0.95, y in 0.05f64..0.95, a in 2usize..8, b in 0usize..10) {
        let spec = EnsembleSpec::new(
            BTreeMap::from([(3, x), (4, 1.0 - x)]),
            BTreeMap::from([(6, y), (8, 1.0 - y)]),
            1000,
        ).unwrap();
        let mut bounds = vec![
            lets_expected::<f64>(&spec, a, b).unwrap(),
            abs_expected::<f64>(&spec, a, b).unwrap(),
            ets_expected_irregular_min_b::<f64>(a, &spec, 6, EtsMode::ExactB).unwrap(),
            ets_expected_irregular_min_b::<f64>(a, &spec, 6, EtsMode::CatalanUpper).unwrap(),
            expected_cycles_partial_signature::<f64>(&spec, &CycleSignature::free(2 * a).unwrap()).unwrap(),
        ];
        bounds.push(ets_expected_variable_regular::<f64>(a, 3, &spec.rho, 6, EtsMode::CatalanUpper).unwrap());
        for bound in bounds {
            prop_assert!(bound.lower_factor > 0.0 && bound.lower_factor <= 1.0);
            prop_assert!(bound.estimate >= 0.0);
            prop_assert!(bound.lower() <= bound.estimate);
        }
    }

    #[test]
    fn specht_is_monotone(h in 1.0f64..50.0, step in 0.0f64..5.0) {
        let s1 = specht_ratio(h).unwrap();
        let s2 = specht_ratio(h + step).unwrap();
        prop_assert!(s1 >= 1.0);
        prop_assert!(s2 >= s1 - 1e-12);
    }
}
