use serde::Serialize;

/// Tree-size profile `(t_0, t_1, …, t_i)` of the `a` cycle variables of an
/// elementary structure: `t_p` of them root a tree with `p` variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ForestPartition(pub Vec<usize>);

impl ForestPartition {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Number of cycle variables, `Σ t_p`.
    pub fn cycle_length(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of tree variables, `Σ p t_p`.
    pub fn tree_variables(&self) -> usize {
        self.0.iter().enumerate().map(|(p, t)| p * t).sum()
    }
}

/// All `(t_0, …, t_i)` with `Σ_{p≥1} p t_p = i` and
/// `t_0 = a - i - Σ_{p≥1} t_p >= 0`, in lexicographic order.
pub fn forest_partitions(a: usize, i: usize) -> Vec<ForestPartition> {
    if i > a {
        return Vec::new();
    }
    let cycle = a - i;
    let mut tail = vec![0usize; i];
    let mut out = Vec::new();
    fill(i, 1, cycle, &mut tail, &mut out);
    out.sort();
    out
}

// Chooses t_p for p >= part, given `left` tree variables still to place and
// at most `slots` cycle variables still free.
fn fill(left: usize, part: usize, slots: usize, tail: &mut [usize], out: &mut Vec<ForestPartition>) {
    if left == 0 {
        let mut seq = Vec::with_capacity(tail.len() + 1);
        seq.push(slots);
        seq.extend_from_slice(tail);
        out.push(ForestPartition(seq));
        return;
    }
    if part > left {
        return;
    }
    for t in 0..=(left / part).min(slots) {
        tail[part - 1] = t;
        fill(left - t * part, part + 1, slots - t, tail, out);
    }
    tail[part - 1] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(a: usize, i: usize) -> Vec<Vec<usize>> {
        forest_partitions(a, i).into_iter().map(|p| p.0).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(raw(4, 1), vec![vec![2, 1]]);
        assert_eq!(raw(5, 2), vec![vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(raw(6, 0), vec![vec![6]]);
        assert_eq!(raw(5, 3), vec![vec![0, 1, 1, 0], vec![1, 0, 0, 1]]);
    }

    #[test]
    fn constraints_hold() {
        for a in 2..10 {
            for i in 0..=a - 2 {
                for p in forest_partitions(a, i) {
                    assert_eq!(p.cycle_length(), a - i);
                    assert_eq!(p.tree_variables(), i);
                }
            }
        }
    }
}
