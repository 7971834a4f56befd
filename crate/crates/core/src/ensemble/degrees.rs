use super::{EnsembleError, EnsembleSpec};

/// Integer degree sequences for both sides of a Tanner graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequencePair {
    pub variable_degrees: Vec<usize>,
    pub check_degrees: Vec<usize>,
}

impl DegreeSequencePair {
    pub fn new(variable_degrees: Vec<usize>, check_degrees: Vec<usize>) -> Result<Self, EnsembleError> {
        let seq = DegreeSequencePair { variable_degrees, check_degrees };
        let (v, c) = (seq.variable_degrees.iter().sum::<usize>(), seq.check_degrees.iter().sum());
        if v != c {
            return Err(EnsembleError::Handshake { variable_edges: v, check_edges: c });
        }
        if seq.variable_degrees.contains(&0) || seq.check_degrees.contains(&0) {
            return Err(EnsembleError::InvalidSpec("degree sequences must be positive".into()));
        }
        Ok(seq)
    }

    /// η, the number of edges.
    pub fn edge_count(&self) -> usize {
        self.variable_degrees.iter().sum()
    }

    pub fn n(&self) -> usize {
        self.variable_degrees.len()
    }

    pub fn n_checks(&self) -> usize {
        self.check_degrees.len()
    }
}

/// Largest-remainder split of `total` nodes over `(degree, fraction)` pairs.
/// Ties in the fractional part go to the smaller degree.
fn largest_remainder(total: usize, fractions: &[(usize, f64)]) -> Vec<usize> {
    let targets: Vec<f64> = fractions.iter().map(|&(_, f)| f * total as f64).collect();
    let mut counts: Vec<usize> = targets.iter().map(|t| t.floor() as usize).collect();
    let assigned: usize = counts.iter().sum();
    let mut order: Vec<usize> = (0..fractions.len()).collect();
    order.sort_by(|&x, &y| {
        let rx = targets[x] - targets[x].floor();
        let ry = targets[y] - targets[y].floor();
        ry.total_cmp(&rx).then(x.cmp(&y))
    });
    for &k in order.iter().cycle().take(total.saturating_sub(assigned)) {
        counts[k] += 1;
    }
    counts
}

fn node_fractions(degrees: &[usize], frac: impl Fn(usize) -> f64) -> Vec<(usize, f64)> {
    degrees.iter().map(|&d| (d, frac(d))).collect()
}

/// Convert the spec's edge-perspective distributions into integer degree
/// sequences with an exact handshake.
///
/// Node counts come from largest-remainder rounding of the node fractions;
/// the check side is then repaired at its most frequent degree (with small
/// compensating moves at the other degrees when divisibility requires it).
pub fn realize_degree_sequence(spec: &EnsembleSpec) -> Result<DegreeSequencePair, EnsembleError> {
    spec.validate()?;
    let n = spec.n;
    let vdeg = spec.variable_degrees();
    let vcounts = largest_remainder(n, &node_fractions(&vdeg, |d| spec.variable_node_fraction(d)));
    if let Some(k) = vcounts.iter().position(|&c| c == 0) {
        return Err(EnsembleError::TooFewNodes { n, degree: vdeg[k] });
    }
    let edges: usize = vdeg.iter().zip(&vcounts).map(|(d, c)| d * c).sum();

    let cdeg = spec.check_degrees();
    let cfrac = node_fractions(&cdeg, |d| spec.check_node_fraction(d));
    let n_checks = ((edges as f64) / spec.average_check_degree()).round().max(1.0) as usize;
    let mut ccounts: Vec<i64> =
        largest_remainder(n_checks, &cfrac).into_iter().map(|c| c as i64).collect();
    let deficit = edges as i64 - cdeg.iter().zip(&ccounts).map(|(&d, &c)| d as i64 * c).sum::<i64>();
    if deficit != 0 {
        let adjust = repair(&cdeg, &cfrac, &ccounts, deficit)
            .ok_or(EnsembleError::Infeasible { edges, deficit })?;
        for (c, delta) in ccounts.iter_mut().zip(adjust) {
            *c += delta;
        }
    }

    let mut variable_degrees = Vec::with_capacity(n);
    for (&d, &c) in vdeg.iter().zip(&vcounts) {
        variable_degrees.extend(std::iter::repeat_n(d, c));
    }
    let mut check_degrees = Vec::new();
    for (&d, &c) in cdeg.iter().zip(&ccounts) {
        check_degrees.extend(std::iter::repeat_n(d, c as usize));
    }
    DegreeSequencePair::new(variable_degrees, check_degrees)
}

/// Per-degree count changes that close `deficit` edges, keeping every degree
/// in the support populated. Minimizes the number of nodes moved.
fn repair(degrees: &[usize], fractions: &[(usize, f64)], counts: &[i64], deficit: i64) -> Option<Vec<i64>> {
    let main = (0..degrees.len())
        .max_by(|&x, &y| fractions[x].1.total_cmp(&fractions[y].1).then(y.cmp(&x)))
        .unwrap();
    let pivot = degrees[main] as i64;
    let others: Vec<usize> = (0..degrees.len()).filter(|&k| k != main).collect();
    let radius = pivot;
    let width = (2 * radius + 1) as u64;
    let exhaustive = width.checked_pow(others.len() as u32).is_some_and(|s| s <= 1 << 20);

    let mut best: Option<(i64, Vec<i64>)> = None;
    let mut consider = |delta: Vec<i64>| {
        let moved: i64 = delta.iter().map(|d| d.abs()).sum();
        let rest = deficit - (0..degrees.len()).map(|k| delta[k] * degrees[k] as i64).sum::<i64>();
        if rest % pivot != 0 {
            return;
        }
        let mut delta = delta;
        delta[main] = rest / pivot;
        if (0..degrees.len()).any(|k| counts[k] + delta[k] < 1) {
            return;
        }
        let cost = moved + delta[main].abs();
        if best.as_ref().is_none_or(|(c, _)| cost < *c) {
            best = Some((cost, delta));
        }
    };

    if exhaustive {
        let total = width.pow(others.len() as u32);
        for code in 0..total {
            let mut delta = vec![0i64; degrees.len()];
            let mut rem = code;
            for &k in &others {
                delta[k] = (rem % width) as i64 - radius;
                rem /= width;
            }
            consider(delta);
        }
    } else {
        consider(vec![0; degrees.len()]);
        for &k in &others {
            for step in -radius..=radius {
                let mut delta = vec![0i64; degrees.len()];
                delta[k] = step;
                consider(delta);
            }
        }
    }
    best.map(|(_, d)| d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn count(seq: &[usize], d: usize) -> usize {
        seq.iter().filter(|&&x| x == d).count()
    }

    #[test]
    fn trivial_and_regular() {
        let seq = realize_degree_sequence(&EnsembleSpec::biregular(2, 2, 2).unwrap()).unwrap();
        assert_eq!(seq.variable_degrees, vec![2, 2]);
        assert_eq!(seq.check_degrees, vec![2, 2]);
        assert_eq!(seq.edge_count(), 4);

        let seq = realize_degree_sequence(&EnsembleSpec::biregular(3, 6, 1008).unwrap()).unwrap();
        assert_eq!(seq.n(), 1008);
        assert_eq!(seq.n_checks(), 504);
        assert_eq!(seq.edge_count(), 3024);
    }

    #[test]
    fn irregular_example() {
        let spec = EnsembleSpec::new(
            BTreeMap::from([(3, 0.4286), (4, 0.5714)]),
            BTreeMap::from([(7, 1.0)]),
            1000,
        )
        .unwrap();
        let seq = realize_degree_sequence(&spec).unwrap();
        assert_eq!(count(&seq.variable_degrees, 3), 500);
        assert_eq!(count(&seq.variable_degrees, 4), 500);
        assert_eq!(seq.check_degrees, vec![7; 500]);
        assert_eq!(seq.edge_count(), 3500);
    }

    #[test]
    fn repair_closes_odd_totals() {
        // 7 degree-3 variables give 21 edges; degree-6 checks alone cannot match.
        let err = realize_degree_sequence(&EnsembleSpec::biregular(3, 6, 7).unwrap()).unwrap_err();
        assert!(matches!(err, EnsembleError::Infeasible { edges: 21, .. }));

        let spec = EnsembleSpec::new(BTreeMap::from([(3, 1.0)]), BTreeMap::from([(5, 0.5), (6, 0.5)]), 7).unwrap();
        let seq = realize_degree_sequence(&spec).unwrap();
        assert_eq!(seq.check_degrees.iter().sum::<usize>(), 21);
    }

    #[test]
    fn too_small_n() {
        let spec = EnsembleSpec::new(
            BTreeMap::from([(2, 0.01), (3, 0.99)]),
            BTreeMap::from([(6, 1.0)]),
            4,
        )
        .unwrap();
        assert!(matches!(realize_degree_sequence(&spec), Err(EnsembleError::TooFewNodes { degree: 2, .. })));
    }
}
