use std::collections::HashSet;

use super::{EnumerationError, MultiplicityTable};
use crate::ensemble::TannerGraph;
use crate::structures::{classify, induce};

pub const BRUTE_FORCE_MAX_N: usize = 64;

/// Census of all connected variable sets with `a <= a_max`, every category at
/// once, by breadth-first set expansion over 64-bit masks.
///
/// Shares no code with the incremental search: each set is rebuilt with
/// [`induce`] and classified with [`classify`].
pub fn brute_force_census(graph: &TannerGraph, a_max: usize, b_max: usize) -> Result<MultiplicityTable, EnumerationError> {
    let n = graph.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(EnumerationError::TooLarge { n, limit: BRUTE_FORCE_MAX_N });
    }
    let mut table = MultiplicityTable::new(a_max, b_max);
    if a_max == 0 || n == 0 {
        return Ok(table);
    }
    let mut near = vec![0u64; n];
    for (v, mask) in near.iter_mut().enumerate() {
        for &w in graph.checks_of(v) {
            for &u in graph.variables_of(w as usize) {
                *mask |= 1 << u;
            }
        }
        *mask &= !(1 << v);
    }

    let mut level: HashSet<u64> = (0..n).map(|v| 1u64 << v).collect();
    let mut ids = Vec::with_capacity(a_max);
    for size in 1..=a_max {
        for &set in &level {
            ids.clear();
            ids.extend((0..n).filter(|&v| set >> v & 1 == 1));
            let inst = induce(graph, &ids).expect("ids are in range");
            if inst.b > b_max {
                continue;
            }
            for c in classify(&inst, graph).members() {
                table.add(c, size, inst.b, 1);
            }
        }
        if size == a_max {
            break;
        }
        let mut next = HashSet::with_capacity(level.len() * 4);
        for &set in &level {
            let mut frontier = (0..n).filter(|&v| set >> v & 1 == 1).fold(0u64, |m, v| m | near[v]) & !set;
            while frontier != 0 {
                let u = frontier.trailing_zeros();
                frontier &= frontier - 1;
                next.insert(set | 1 << u);
            }
        }
        level = next;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::Category;

    #[test]
    fn four_cycle_census() {
        let g = TannerGraph::from_edges(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert!(brute_force_census(&g, 0, 10).unwrap().is_empty());
        let t = brute_force_census(&g, 2, 10).unwrap();
        for c in [Category::Ss, Category::Ets, Category::Lets, Category::Abs, Category::Eabs] {
            assert_eq!(t.get(c, 2, 0), 1, "{c}");
        }
        assert_eq!(t.get(Category::Ts, 1, 2), 2);
        assert_eq!(t.get(Category::Ets, 1, 2), 2);
    }
}
