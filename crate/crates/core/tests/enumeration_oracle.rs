use std::collections::BTreeMap;

use trapset::ensemble::{realize_degree_sequence, sample_tanner_graph, EnsembleSpec, TannerGraph};
use trapset::enumeration::{brute_force_census, census, SearchOptions, Strategy};
use trapset::structures::Category;

fn graph(lambda: &[(usize, f64)], rho: &[(usize, f64)], n: usize, seed: u64) -> TannerGraph {
    let spec = EnsembleSpec::new(BTreeMap::from_iter(lambda.iter().copied()), BTreeMap::from_iter(rho.iter().copied()), n)
        .unwrap();
    let seq = realize_degree_sequence(&spec).unwrap();
    sample_tanner_graph(&seq, seed, None, 100_000).unwrap()
}

fn check(g: &TannerGraph, a_max: usize, b_max: usize) {
    let brute = brute_force_census(g, a_max, b_max).unwrap();
    for c in Category::ALL {
        let want = brute.restrict(c);
        let opts = SearchOptions { verify_unique: true, ..SearchOptions::default() };
        let got = census(g, &[c], a_max, b_max, &opts).unwrap();
        assert_eq!(got.to_csv(), want.to_csv(), "{c} auto");
        let opts = SearchOptions { strategy: Strategy::Expansion, verify_unique: true, ..SearchOptions::default() };
        let got = census(g, &[c], a_max, b_max, &opts).unwrap();
        assert_eq!(got.to_csv(), want.to_csv(), "{c} expansion");
    }
    let all = census(g, &Category::ALL, a_max, b_max, &SearchOptions::default()).unwrap();
    assert_eq!(all.to_csv(), brute.to_csv());
}

#[test]
fn small_biregular() {
    for seed in 0..3 {
        check(&graph(&[(3, 1.0)], &[(6, 1.0)], 30, seed), 5, 100);
    }
}

#[test]
fn small_mixed_degrees() {
    check(&graph(&[(2, 0.3), (3, 0.7)], &[(5, 0.5), (6, 0.5)], 40, 7), 5, 100);
    check(&graph(&[(3, 0.4286), (4, 0.5714)], &[(7, 1.0)], 40, 8), 5, 4);
}
