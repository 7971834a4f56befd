use std::collections::BTreeMap;

use trapset::ensemble::{girth, realize_degree_sequence, sample_tanner_graph, EnsembleSpec, TannerGraph};
use trapset::enumeration::{count_cycles, enumerate_cycles};

fn sample(spec: &EnsembleSpec, seed: u64, girth_min: Option<usize>) -> TannerGraph {
    let seq = realize_degree_sequence(spec).unwrap();
    sample_tanner_graph(&seq, seed, girth_min, 100_000).unwrap()
}

/// Plain DFS over closed walks from each smallest variable; every cycle is
/// found once per direction.
fn naive_counts(g: &TannerGraph, c_max: usize) -> (Vec<u64>, Vec<u64>) {
    let slots = c_max / 2 - 1;
    let (mut all, mut chordless) = (vec![0u64; slots], vec![0u64; slots]);
    for s in 0..g.n() {
        let mut vars = vec![s];
        let mut checks = Vec::new();
        walk(g, s, c_max, &mut vars, &mut checks, &mut all, &mut chordless);
    }
    (all.iter().map(|x| x / 2).collect(), chordless.iter().map(|x| x / 2).collect())
}

fn walk(
    g: &TannerGraph,
    s: usize,
    c_max: usize,
    vars: &mut Vec<usize>,
    checks: &mut Vec<usize>,
    all: &mut [u64],
    chordless: &mut [u64],
) {
    let v = *vars.last().unwrap();
    for &w in g.checks_of(v) {
        let w = w as usize;
        if checks.contains(&w) {
            continue;
        }
        checks.push(w);
        for &u in g.variables_of(w) {
            let u = u as usize;
            if u == s && vars.len() >= 2 {
                let slot = vars.len() - 2;
                all[slot] += 1;
                let free = vars
                    .iter()
                    .all(|&x| g.checks_of(x).iter().filter(|&&c| checks.contains(&(c as usize))).count() == 2);
                if free {
                    chordless[slot] += 1;
                }
            } else if u > s && !vars.contains(&u) && 2 * (vars.len() + 1) <= c_max {
                vars.push(u);
                walk(g, s, c_max, vars, checks, all, chordless);
                vars.pop();
            }
        }
        checks.pop();
    }
}

#[test]
fn cycle_counts_match_naive_search() {
    let specs = [
        EnsembleSpec::biregular(3, 6, 40).unwrap(),
        EnsembleSpec::new(BTreeMap::from([(2, 0.3), (3, 0.4), (4, 0.3)]), BTreeMap::from([(5, 0.5), (6, 0.5)]), 40)
            .unwrap(),
    ];
    for spec in &specs {
        for seed in 0..4 {
            let g = sample(spec, seed, None);
            assert_eq!(count_cycles(&g, 12).unwrap(), naive_counts(&g, 12), "seed {seed}");
        }
    }
}

#[test]
fn cycle_records_are_cycles() {
    let g = sample(&EnsembleSpec::biregular(3, 6, 60).unwrap(), 3, None);
    let records = enumerate_cycles(&g, 10).unwrap();
    assert!(!records.is_empty());
    for r in &records {
        let k = r.variables.len();
        assert_eq!(r.length, 2 * k);
        for i in 0..k {
            assert!(g.has_edge(r.variables[i], r.checks[i]));
            assert!(g.has_edge(r.variables[i], r.checks[(i + k - 1) % k]));
        }
        assert_eq!(r.variable_degree_counts, BTreeMap::from([(3, k)]));
    }
    assert_eq!(girth(&g), Some(records[0].length));
}

#[test]
fn four_cycle_mean_matches_ensemble() {
    let spec = EnsembleSpec::biregular(3, 6, 500).unwrap();
    let samples = 200;
    let total: u64 = (0..samples).map(|seed| count_cycles(&sample(&spec, seed, None), 4).unwrap().0[0]).sum();
    let mean = total as f64 / samples as f64;
    // Expected ((d_v-1)(d_c-1))^2 / 4 = 25, with standard error near 0.35.
    assert!((mean - 25.0).abs() < 2.0, "mean {mean}");
}

#[test]
fn girth_conditioning() {
    for (spec, g_min) in [
        (EnsembleSpec::biregular(3, 6, 300).unwrap(), 6),
        (EnsembleSpec::biregular(4, 8, 400).unwrap(), 6),
        (EnsembleSpec::biregular(3, 6, 1000).unwrap(), 8),
    ] {
        let g = sample(&spec, 11, Some(g_min));
        assert!(girth(&g).unwrap() >= g_min);
        assert!(g.variable_degrees().iter().all(|&d| d == spec.dv_min()));
        assert!(g.check_degrees().iter().all(|&d| d == spec.dc_min()));
    }
}
