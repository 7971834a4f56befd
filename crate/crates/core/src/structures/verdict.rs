use std::collections::HashMap;

use serde::Serialize;

use super::StructureInstance;

/// Growth of the expected number of copies of a fixed structure as `n` grows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    TendsToInfinity,
    TendsToConstant,
    TendsToZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticVerdict {
    /// `|V| - |E|` of the induced subgraph; copies grow like `n^exponent`.
    pub exponent: i64,
    pub cycle_rank: usize,
    pub components: usize,
    pub verdict: Verdict,
}

/// Cycle rank `|E| - |V| + components` of `G(S)`, with the verdict taken from
/// the sign of `|V| - |E|`. For a connected structure the two agree: rank 0 is
/// a tree, rank 1 is unicyclic, rank 2 or more vanishes.
pub fn cycle_rank(inst: &StructureInstance) -> AsymptoticVerdict {
    let mut index: HashMap<usize, usize> = HashMap::new();
    for (k, &v) in inst.variables.iter().enumerate() {
        index.insert(v, k);
    }
    let a = inst.variables.len();
    for (k, &w) in inst.checks_odd.iter().chain(&inst.checks_even).enumerate() {
        index.insert(usize::MAX - w, a + k);
    }
    let nodes = a + inst.check_count();
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = nodes;
    for &(v, w) in &inst.induced_edges {
        let (x, y) = (find(&mut parent, index[&v]), find(&mut parent, index[&(usize::MAX - w)]));
        if x != y {
            parent[x] = y;
            components -= 1;
        }
    }
    let edges = inst.induced_edges.len();
    let exponent = nodes as i64 - edges as i64;
    let verdict = match exponent {
        e if e > 0 => Verdict::TendsToInfinity,
        0 => Verdict::TendsToConstant,
        _ => Verdict::TendsToZero,
    };
    AsymptoticVerdict { exponent, cycle_rank: edges + components - nodes, components, verdict }
}
