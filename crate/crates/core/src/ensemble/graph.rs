use std::collections::VecDeque;
use std::fmt::Write as _;

use super::EnsembleError;

/// A simple bipartite Tanner graph. Variables are `0..n`, checks `0..n_checks`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerGraph {
    var_adj: Vec<Vec<u32>>,
    check_adj: Vec<Vec<u32>>,
}

impl TannerGraph {
    /// Build from `(variable, check)` pairs. Rejects repeated pairs and
    /// out-of-range ids.
    pub fn from_edges(n: usize, n_checks: usize, edges: &[(usize, usize)]) -> Result<Self, EnsembleError> {
        let mut var_adj = vec![Vec::new(); n];
        let mut check_adj = vec![Vec::new(); n_checks];
        for &(u, w) in edges {
            if u >= n || w >= n_checks {
                return Err(EnsembleError::InvalidGraph(format!(
                    "edge ({u}, {w}) out of range for {n} variables and {n_checks} checks"
                )));
            }
            var_adj[u].push(w as u32);
            check_adj[w].push(u as u32);
        }
        for (u, list) in var_adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|p| p[0] == p[1]) {
                return Err(EnsembleError::InvalidGraph(format!("parallel edge at variable {u}")));
            }
        }
        for list in check_adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(TannerGraph { var_adj, check_adj })
    }

    pub fn n(&self) -> usize {
        self.var_adj.len()
    }

    pub fn n_checks(&self) -> usize {
        self.check_adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.var_adj.iter().map(Vec::len).sum()
    }

    /// Sorted check neighbors of variable `v`.
    pub fn checks_of(&self, v: usize) -> &[u32] {
        &self.var_adj[v]
    }

    /// Sorted variable neighbors of check `w`.
    pub fn variables_of(&self, w: usize) -> &[u32] {
        &self.check_adj[w]
    }

    pub fn variable_degree(&self, v: usize) -> usize {
        self.var_adj[v].len()
    }

    pub fn check_degree(&self, w: usize) -> usize {
        self.check_adj[w].len()
    }

    pub fn variable_degrees(&self) -> Vec<usize> {
        self.var_adj.iter().map(Vec::len).collect()
    }

    pub fn check_degrees(&self) -> Vec<usize> {
        self.check_adj.iter().map(Vec::len).collect()
    }

    pub fn max_variable_degree(&self) -> usize {
        self.var_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_variable_degree(&self) -> usize {
        self.var_adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges in lexicographic `(variable, check)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.var_adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&w| (u, w as usize)))
    }

    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        self.var_adj[v].binary_search(&(w as u32)).is_ok()
    }

    /// Line-oriented text form: `n n' m`, then one sorted `u w` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 * self.edge_count() + 32);
        let _ = writeln!(out, "{} {} {}", self.n(), self.n_checks(), self.edge_count());
        for (u, w) in self.edges() {
            let _ = writeln!(out, "{u} {w}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, EnsembleError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse = |line: usize, s: &str, want: usize| -> Result<Vec<usize>, EnsembleError> {
            let fields: Result<Vec<usize>, _> = s.split_whitespace().map(str::parse).collect();
            match fields {
                Ok(f) if f.len() == want => Ok(f),
                _ => Err(EnsembleError::Parse {
                    line,
                    message: format!("expected {want} nonnegative integers, found {s:?}"),
                }),
            }
        };
        let (hline, header) = lines
            .next()
            .ok_or(EnsembleError::Parse { line: 1, message: "missing header".into() })?;
        let h = parse(hline, header, 3)?;
        let mut edges = Vec::with_capacity(h[2]);
        for (line, s) in lines {
            let e = parse(line, s, 2)?;
            edges.push((e[0], e[1]));
        }
        if edges.len() != h[2] {
            return Err(EnsembleError::Parse {
                line: hline,
                message: format!("header announces {} edges, file has {}", h[2], edges.len()),
            });
        }
        Self::from_edges(h[0], h[1], &edges)
    }
}

/// Length of the shortest cycle, or `None` for a forest.
///
/// Breadth-first search from every variable node; a non-tree edge between
/// nodes at depths `x` and `y` closes a walk of length `x + y + 1`, and the
/// minimum over all roots is attained by a root lying on a shortest cycle.
pub fn girth(graph: &TannerGraph) -> Option<usize> {
    let n = graph.n();
    let total = n + graph.n_checks();
    let mut dist = vec![u32::MAX; total];
    let mut parent = vec![u32::MAX; total];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    let mut best = usize::MAX;
    let neighbors = |x: usize| -> Box<dyn Iterator<Item = usize> + '_> {
        if x < n {
            Box::new(graph.checks_of(x).iter().map(move |&w| n + w as usize))
        } else {
            Box::new(graph.variables_of(x - n).iter().map(|&u| u as usize))
        }
    };
    for root in 0..n {
        for &t in &touched {
            dist[t] = u32::MAX;
            parent[t] = u32::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            if 2 * dist[x] as usize >= best {
                break;
            }
            for y in neighbors(x) {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x as u32;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y as u32 {
                    best = best.min((dist[x] + dist[y]) as usize + 1);
                    if best == 4 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 4 {
            break;
        }
    }
    (best != usize::MAX).then_some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_cycle() -> TannerGraph {
        TannerGraph::from_edges(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()
    }

    #[test]
    fn girth_small_cases() {
        assert_eq!(girth(&four_cycle()), Some(4));
        let path = TannerGraph::from_edges(2, 1, &[(0, 0), (1, 0)]).unwrap();
        assert_eq!(girth(&path), None);
        // Hexagon: 3 variables, 3 checks.
        let hex = TannerGraph::from_edges(3, 3, &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]).unwrap();
        assert_eq!(girth(&hex), Some(6));
    }

    #[test]
    fn text_round_trip() {
        let g = four_cycle();
        let text = g.to_text();
        assert_eq!(text, "2 2 4\n0 0\n0 1\n1 0\n1 1\n");
        assert_eq!(TannerGraph::from_text(&text).unwrap(), g);
        assert!(TannerGraph::from_text("2 2 3\n0 0\n").is_err());
        assert!(TannerGraph::from_edges(1, 1, &[(0, 0), (0, 0)]).is_err());
    }
}
