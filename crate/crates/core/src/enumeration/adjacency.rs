use crate::ensemble::TannerGraph;

/// Compressed variable-to-variable adjacency: two variables are neighbors
/// when they share a check.
pub(crate) struct VarGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl VarGraph {
    pub(crate) fn new(graph: &TannerGraph) -> Self {
        let mut offsets = Vec::with_capacity(graph.n() + 1);
        let mut targets = Vec::new();
        let mut scratch = Vec::new();
        offsets.push(0);
        for v in 0..graph.n() {
            scratch.clear();
            for &w in graph.checks_of(v) {
                scratch.extend(graph.variables_of(w as usize).iter().copied().filter(|&u| u as usize != v));
            }
            scratch.sort_unstable();
            scratch.dedup();
            targets.extend_from_slice(&scratch);
            offsets.push(targets.len());
        }
        VarGraph { offsets, targets }
    }

    pub(crate) fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}
