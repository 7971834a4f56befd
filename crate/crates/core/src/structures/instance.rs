use serde::Serialize;

use super::StructureError;
use crate::ensemble::TannerGraph;

/// A variable set `S` together with its induced subgraph `G(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureInstance {
    pub variables: Vec<usize>,
    /// Checks with odd induced degree (unsatisfied).
    pub checks_odd: Vec<usize>,
    /// Checks with even, nonzero induced degree (satisfied).
    pub checks_even: Vec<usize>,
    pub induced_edges: Vec<(usize, usize)>,
    pub a: usize,
    pub b: usize,
}

impl StructureInstance {
    pub fn check_count(&self) -> usize {
        self.checks_odd.len() + self.checks_even.len()
    }
}

/// Induced subgraph of `S`: every edge of the graph with its variable in `S`.
pub fn induce(graph: &TannerGraph, s: &[usize]) -> Result<StructureInstance, StructureError> {
    if s.is_empty() {
        return Err(StructureError::Empty);
    }
    let n = graph.n();
    if let Some(&id) = s.iter().find(|&&v| v >= n) {
        return Err(StructureError::InvalidId { id, n });
    }
    let mut variables = s.to_vec();
    variables.sort_unstable();
    variables.dedup();

    let mut induced_edges = Vec::new();
    for &v in &variables {
        induced_edges.extend(graph.checks_of(v).iter().map(|&w| (v, w as usize)));
    }
    let mut checks: Vec<usize> = induced_edges.iter().map(|e| e.1).collect();
    checks.sort_unstable();
    let (mut checks_odd, mut checks_even) = (Vec::new(), Vec::new());
    let mut k = 0;
    while k < checks.len() {
        let run = checks[k..].iter().take_while(|&&w| w == checks[k]).count();
        if run % 2 == 1 {
            checks_odd.push(checks[k]);
        } else {
            checks_even.push(checks[k]);
        }
        k += run;
    }
    Ok(StructureInstance {
        a: variables.len(),
        b: checks_odd.len(),
        variables,
        checks_odd,
        checks_even,
        induced_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_pair() {
        let g = TannerGraph::from_edges(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let inst = induce(&g, &[1, 0]).unwrap();
        assert_eq!((inst.a, inst.b), (2, 0));
        assert_eq!(inst.checks_even, vec![0, 1]);
        assert_eq!(inst.induced_edges.len(), 4);
        assert_eq!(induce(&g, &[]), Err(StructureError::Empty));
        assert_eq!(induce(&g, &[2]), Err(StructureError::InvalidId { id: 2, n: 2 }));
    }
}
