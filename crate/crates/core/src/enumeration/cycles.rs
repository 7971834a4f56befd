use std::collections::BTreeMap;

use serde::Serialize;

use super::EnumerationError;
use crate::ensemble::TannerGraph;

pub const DEFAULT_CYCLE_CAP: u64 = 100_000_000;

/// One cycle of the Tanner graph, listed from its smallest variable and
/// oriented so that the first check is smaller than the last.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleRecord {
    pub length: usize,
    pub chordless: bool,
    /// Variable degree -> number of cycle variables with that degree.
    pub variable_degree_counts: BTreeMap<usize, usize>,
    pub check_degree_counts: BTreeMap<usize, usize>,
    /// `variables[i]` is joined to `checks[i]` and `checks[i - 1]`.
    pub variables: Vec<usize>,
    pub checks: Vec<usize>,
}

impl CycleRecord {
    fn new(graph: &TannerGraph, vars: &[u32], checks: &[u32], chordless: bool) -> Self {
        let mut variable_degree_counts = BTreeMap::new();
        let mut check_degree_counts = BTreeMap::new();
        for &v in vars {
            *variable_degree_counts.entry(graph.variable_degree(v as usize)).or_insert(0) += 1;
        }
        for &w in checks {
            *check_degree_counts.entry(graph.check_degree(w as usize)).or_insert(0) += 1;
        }
        CycleRecord {
            length: 2 * vars.len(),
            chordless,
            variable_degree_counts,
            check_degree_counts,
            variables: vars.iter().map(|&v| v as usize).collect(),
            checks: checks.iter().map(|&w| w as usize).collect(),
        }
    }
}

/// Every cycle of length at most `c_max`, each exactly once, sorted by
/// length and then by vertex sequence.
pub fn enumerate_cycles(graph: &TannerGraph, c_max: usize) -> Result<Vec<CycleRecord>, EnumerationError> {
    let mut out = Vec::new();
    for_each_cycle(graph, c_max, DEFAULT_CYCLE_CAP, |vars, checks, chordless| {
        out.push(CycleRecord::new(graph, vars, checks, chordless));
    })?;
    out.sort_by(|x, y| (x.length, &x.variables, &x.checks).cmp(&(y.length, &y.variables, &y.checks)));
    Ok(out)
}

/// Number of cycles of each length `4, 6, ..., c_max` (index `c / 2 - 2`),
/// split into all cycles and chordless cycles.
pub fn count_cycles(graph: &TannerGraph, c_max: usize) -> Result<(Vec<u64>, Vec<u64>), EnumerationError> {
    let slots = c_max / 2 - 1;
    let (mut all, mut chordless) = (vec![0; slots], vec![0; slots]);
    for_each_cycle(graph, c_max, DEFAULT_CYCLE_CAP, |vars, _, free| {
        all[vars.len() - 2] += 1;
        if free {
            chordless[vars.len() - 2] += 1;
        }
    })?;
    Ok((all, chordless))
}

struct Paths {
    /// Variables of each path, `stride` slots each (start first).
    vars: Vec<u32>,
    checks: Vec<u32>,
    /// `(end, hops, index)` of each stored path.
    keys: Vec<(u32, u8, u32)>,
    stride: usize,
}

/// Call `visit(variables, checks, chordless)` once per cycle of length at
/// most `c_max`. Returns the number of cycles visited.
///
/// Cycles are found by joining two variable-disjoint paths out of the
/// cycle's smallest variable that meet halfway round, so the work per start
/// grows with the number of half-length paths rather than full-length ones.
pub fn for_each_cycle<F>(graph: &TannerGraph, c_max: usize, cap: u64, mut visit: F) -> Result<u64, EnumerationError>
where
    F: FnMut(&[u32], &[u32], bool),
{
    if c_max < 4 || c_max % 2 == 1 {
        return Err(EnumerationError::InvalidCycleLength(c_max));
    }
    let k_max = c_max / 2;
    let half = k_max.div_ceil(2);
    let n = graph.n();
    let mut on_var = vec![false; n];
    let mut on_check = vec![false; graph.n_checks()];
    let mut paths = Paths { vars: Vec::new(), checks: Vec::new(), keys: Vec::new(), stride: half + 1 };
    let mut cyc_vars = Vec::with_capacity(k_max);
    let mut cyc_checks = Vec::with_capacity(k_max);
    let mut found = 0u64;

    let mut stack_vars = vec![0u32; half + 1];
    let mut stack_checks = vec![0u32; half];
    for s in 0..n {
        paths.vars.clear();
        paths.checks.clear();
        paths.keys.clear();
        stack_vars[0] = s as u32;
        on_var[s] = true;
        grow(graph, s as u32, 0, half, &mut stack_vars, &mut stack_checks, &mut on_var, &mut on_check, &mut paths);
        on_var[s] = false;
        paths.keys.sort_unstable();

        let keys = &paths.keys;
        let mut g = 0;
        while g < keys.len() {
            let end = keys[g].0;
            let group_end = g + keys[g..].iter().take_while(|k| k.0 == end).count();
            let group = &keys[g..group_end];
            let range = |h: usize| {
                let lo = group.partition_point(|k| (k.1 as usize) < h);
                let hi = group.partition_point(|k| (k.1 as usize) <= h);
                &group[lo..hi]
            };
            for k in 2..=k_max {
                let (ha, hb) = (k.div_ceil(2), k / 2);
                for &(_, _, ia) in range(ha) {
                    let (av, ac) = path(&paths, ia as usize, ha);
                    for &(_, _, ib) in range(hb) {
                        let (bv, bc) = path(&paths, ib as usize, hb);
                        if ac[0] >= bc[0] {
                            continue;
                        }
                        if av[1..ha].iter().any(|x| bv[1..hb].contains(x)) || ac.iter().any(|x| bc.contains(x)) {
                            continue;
                        }
                        cyc_vars.clear();
                        cyc_checks.clear();
                        cyc_vars.extend_from_slice(&av[..=ha]);
                        cyc_vars.extend(bv[1..hb].iter().rev());
                        cyc_checks.extend_from_slice(ac);
                        cyc_checks.extend(bc.iter().rev());
                        found += 1;
                        if found > cap {
                            return Err(EnumerationError::CycleCap { cap, found: cap });
                        }
                        let chordless = is_chordless(graph, &cyc_vars, &cyc_checks, &mut on_check);
                        visit(&cyc_vars, &cyc_checks, chordless);
                    }
                }
            }
            g = group_end;
        }
    }
    Ok(found)
}

fn path(paths: &Paths, index: usize, hops: usize) -> (&[u32], &[u32]) {
    let stride = paths.stride;
    (
        &paths.vars[index * stride..index * stride + hops + 1],
        &paths.checks[index * (stride - 1)..index * (stride - 1) + hops],
    )
}

#[allow(clippy::too_many_arguments)]
fn grow(
    graph: &TannerGraph,
    start: u32,
    depth: usize,
    half: usize,
    stack_vars: &mut [u32],
    stack_checks: &mut [u32],
    on_var: &mut [bool],
    on_check: &mut [bool],
    paths: &mut Paths,
) {
    if depth == half {
        return;
    }
    let v = stack_vars[depth] as usize;
    for &w in graph.checks_of(v) {
        if on_check[w as usize] {
            continue;
        }
        on_check[w as usize] = true;
        stack_checks[depth] = w;
        for &u in graph.variables_of(w as usize) {
            if u <= start || on_var[u as usize] {
                continue;
            }
            stack_vars[depth + 1] = u;
            let index = paths.keys.len() as u32;
            paths.keys.push((u, (depth + 1) as u8, index));
            paths.vars.extend_from_slice(&stack_vars[..=depth + 1]);
            paths.vars.resize(paths.vars.len() + half - depth - 1, 0);
            paths.checks.extend_from_slice(&stack_checks[..=depth]);
            paths.checks.resize(paths.checks.len() + half - depth - 1, 0);
            on_var[u as usize] = true;
            grow(graph, start, depth + 1, half, stack_vars, stack_checks, on_var, on_check, paths);
            on_var[u as usize] = false;
        }
        on_check[w as usize] = false;
    }
}

/// A cycle is chordless when each of its variables meets exactly two of its
/// checks. `mark` must be all-false on entry and is restored on exit.
fn is_chordless(graph: &TannerGraph, vars: &[u32], checks: &[u32], mark: &mut [bool]) -> bool {
    for &w in checks {
        mark[w as usize] = true;
    }
    let ok = vars
        .iter()
        .all(|&v| graph.checks_of(v as usize).iter().filter(|&&w| mark[w as usize]).count() == 2);
    for &w in checks {
        mark[w as usize] = false;
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle() {
        let g = TannerGraph::from_edges(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let cycles = enumerate_cycles(&g, 4).unwrap();
        assert_eq!(cycles.len(), 1);
        let c = &cycles[0];
        assert_eq!((c.length, c.chordless), (4, true));
        assert_eq!(c.variable_degree_counts, BTreeMap::from([(2, 2)]));
        assert_eq!(c.check_degree_counts, BTreeMap::from([(2, 2)]));
        assert_eq!((c.variables.clone(), c.checks.clone()), (vec![0, 1], vec![0, 1]));
    }

    #[test]
    fn k23_has_three_four_cycles() {
        let edges: Vec<(usize, usize)> = (0..2).flat_map(|v| (0..3).map(move |w| (v, w))).collect();
        let g = TannerGraph::from_edges(2, 3, &edges).unwrap();
        let cycles = enumerate_cycles(&g, 8).unwrap();
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.length == 4 && c.chordless));
    }

    #[test]
    fn odd_half_lengths() {
        // A single 10-cycle: five variables, five checks.
        let edges: Vec<(usize, usize)> = (0..5).flat_map(|v| [(v, v), (v, (v + 1) % 5)]).collect();
        let g = TannerGraph::from_edges(5, 5, &edges).unwrap();
        assert_eq!(count_cycles(&g, 10).unwrap(), (vec![0, 0, 0, 1], vec![0, 0, 0, 1]));
        assert_eq!(count_cycles(&g, 8).unwrap().0, vec![0, 0, 0]);
        let c = &enumerate_cycles(&g, 12).unwrap()[0];
        assert_eq!(c.variables, vec![0, 4, 3, 2, 1]);
        assert_eq!(c.checks, vec![0, 4, 3, 2, 1]);
    }
}
