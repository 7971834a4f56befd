use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{DegreeSequencePair, EnsembleError, TannerGraph};
use crate::rng::{stream_rng, TrialRng};

/// Why the last sampling attempt was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    ParallelEdge,
    Girth { found: usize },
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::ParallelEdge => write!(f, "parallel edge"),
            FailureReason::Girth { found } => write!(f, "cycle of length {found} below the girth bound"),
        }
    }
}

pub fn default_max_retries(n: usize) -> usize {
    10 * n.max(1)
}

/// Sample a simple Tanner graph with the given degrees, deterministically in
/// `(seq, seed, girth_min)`.
///
/// Without a girth bound (or with bound 4) the configuration model is
/// resampled until the image is simple. For `girth_min >= 6` the initial
/// matching is repaired by random degree-preserving switchings that rewire an
/// edge sitting on a parallel pair or a short cycle; `max_retries` caps the
/// number of switch attempts.
pub fn sample_tanner_graph(
    seq: &DegreeSequencePair,
    seed: u64,
    girth_min: Option<usize>,
    max_retries: usize,
) -> Result<TannerGraph, EnsembleError> {
    sample_with_rng(seq, &mut stream_rng(seed, 0), girth_min, max_retries)
}

pub fn sample_with_rng(
    seq: &DegreeSequencePair,
    rng: &mut TrialRng,
    girth_min: Option<usize>,
    max_retries: usize,
) -> Result<TannerGraph, EnsembleError> {
    DegreeSequencePair::new(seq.variable_degrees.clone(), seq.check_degrees.clone())?;
    match girth_min {
        Some(g) if g < 4 || g % 2 == 1 => Err(EnsembleError::InvalidGirth(g)),
        Some(g) if g >= 6 => Switcher::new(seq, rng).run(rng, g, max_retries.max(1)),
        _ => reject_until_simple(seq, rng, max_retries.max(1)),
    }
}

fn stubs(degrees: &[usize]) -> Vec<u32> {
    let mut out = Vec::with_capacity(degrees.iter().sum());
    for (id, &d) in degrees.iter().enumerate() {
        out.extend(std::iter::repeat_n(id as u32, d));
    }
    out
}

fn random_matching(seq: &DegreeSequencePair, rng: &mut TrialRng) -> Vec<(u32, u32)> {
    let mut checks = stubs(&seq.check_degrees);
    checks.shuffle(rng);
    stubs(&seq.variable_degrees).into_iter().zip(checks).collect()
}

fn into_graph(seq: &DegreeSequencePair, edges: &[(u32, u32)]) -> Result<TannerGraph, EnsembleError> {
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, w)| (u as usize, w as usize)).collect();
    TannerGraph::from_edges(seq.n(), seq.n_checks(), &pairs)
}

fn reject_until_simple(
    seq: &DegreeSequencePair,
    rng: &mut TrialRng,
    max_retries: usize,
) -> Result<TannerGraph, EnsembleError> {
    for _ in 0..max_retries {
        let edges = random_matching(seq, rng);
        // Variable stubs are laid out contiguously, so each variable's checks
        // form one run of the edge list.
        let mut start = 0;
        let mut simple = true;
        let mut run: Vec<u32> = Vec::new();
        for &d in &seq.variable_degrees {
            run.clear();
            run.extend(edges[start..start + d].iter().map(|e| e.1));
            run.sort_unstable();
            if run.windows(2).any(|p| p[0] == p[1]) {
                simple = false;
                break;
            }
            start += d;
        }
        if simple {
            return into_graph(seq, &edges);
        }
    }
    Err(EnsembleError::RetriesExhausted { attempts: max_retries, reason: FailureReason::ParallelEdge })
}

/// Multigraph under repair. Switchings only exchange check endpoints, so the
/// per-variable edge index lists never change.
struct Switcher {
    n: usize,
    edges: Vec<(u32, u32)>,
    var_edges: Vec<Vec<u32>>,
    check_edges: Vec<Vec<u32>>,
    dist: Vec<u32>,
    parent_edge: Vec<u32>,
    touched: Vec<usize>,
    queue: Vec<usize>,
}

impl Switcher {
    fn new(seq: &DegreeSequencePair, rng: &mut TrialRng) -> Self {
        let edges = random_matching(seq, rng);
        let mut var_edges = vec![Vec::new(); seq.n()];
        let mut check_edges = vec![Vec::new(); seq.n_checks()];
        for (e, &(u, w)) in edges.iter().enumerate() {
            var_edges[u as usize].push(e as u32);
            check_edges[w as usize].push(e as u32);
        }
        let total = seq.n() + seq.n_checks();
        Switcher {
            n: seq.n(),
            edges,
            var_edges,
            check_edges,
            dist: vec![u32::MAX; total],
            parent_edge: vec![u32::MAX; total],
            touched: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn run(
        mut self,
        rng: &mut TrialRng,
        girth_min: usize,
        max_attempts: usize,
    ) -> Result<TannerGraph, EnsembleError> {
        let mut attempts = 0;
        let mut cursor = 0;
        let mut clean_streak = 0;
        while clean_streak < self.n {
            let v = cursor;
            match self.short_cycle_edge(v, girth_min) {
                None => {
                    clean_streak += 1;
                    cursor = (cursor + 1) % self.n;
                }
                Some((edge, length)) => {
                    clean_streak = 0;
                    attempts += 1;
                    if attempts > max_attempts {
                        let reason = if length == 2 {
                            FailureReason::ParallelEdge
                        } else {
                            FailureReason::Girth { found: length }
                        };
                        return Err(EnsembleError::RetriesExhausted { attempts: max_attempts, reason });
                    }
                    let other = rng.random_range(0..self.edges.len());
                    self.try_switch(edge, other);
                }
            }
        }
        let seq_n_checks = self.check_edges.len();
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&(u, w)| (u as usize, w as usize)).collect();
        TannerGraph::from_edges(self.n, seq_n_checks, &pairs)
    }

    fn has_edge(&self, v: u32, w: u32) -> bool {
        self.var_edges[v as usize].iter().any(|&e| self.edges[e as usize].1 == w)
    }

    /// Swap the check endpoints of edges `a` and `b` unless that would create
    /// a parallel pair or the edges share an endpoint.
    fn try_switch(&mut self, a: usize, b: usize) -> bool {
        let (va, wa) = self.edges[a];
        let (vb, wb) = self.edges[b];
        if va == vb || wa == wb || self.has_edge(va, wb) || self.has_edge(vb, wa) {
            return false;
        }
        self.edges[a].1 = wb;
        self.edges[b].1 = wa;
        for slot in self.check_edges[wa as usize].iter_mut() {
            if *slot == a as u32 {
                *slot = b as u32;
            }
        }
        for slot in self.check_edges[wb as usize].iter_mut() {
            if *slot == b as u32 {
                *slot = a as u32;
            }
        }
        true
    }

    /// An edge on a cycle of length below `girth_min` reachable from `root`
    /// (parallel pairs count as 2-cycles), with that cycle's length bound.
    fn short_cycle_edge(&mut self, root: usize, girth_min: usize) -> Option<(usize, usize)> {
        for &t in &self.touched {
            self.dist[t] = u32::MAX;
            self.parent_edge[t] = u32::MAX;
        }
        self.touched.clear();
        self.queue.clear();
        self.dist[root] = 0;
        self.touched.push(root);
        self.queue.push(root);
        let n = self.n;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            let dx = self.dist[x] as usize;
            if 2 * dx + 2 > girth_min {
                break;
            }
            let incident = if x < n { &self.var_edges[x] } else { &self.check_edges[x - n] };
            for &e in incident {
                if e == self.parent_edge[x] {
                    continue;
                }
                let (u, w) = self.edges[e as usize];
                let y = if x < n { n + w as usize } else { u as usize };
                if self.dist[y] == u32::MAX {
                    self.dist[y] = dx as u32 + 1;
                    self.parent_edge[y] = e;
                    self.touched.push(y);
                    self.queue.push(y);
                } else {
                    let length = dx + self.dist[y] as usize + 1;
                    if length < girth_min {
                        return Some((e as usize, length));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{girth, realize_degree_sequence, EnsembleSpec};

    #[test]
    fn four_cycle_is_the_only_outcome() {
        let seq = DegreeSequencePair::new(vec![2, 2], vec![2, 2]).unwrap();
        for seed in 0..10 {
            let g = sample_tanner_graph(&seq, seed, None, 20).unwrap();
            assert_eq!(g.to_text(), "2 2 4\n0 0\n0 1\n1 0\n1 1\n");
        }
    }

    #[test]
    fn girth_six_switching() {
        let seq = realize_degree_sequence(&EnsembleSpec::biregular(3, 6, 400).unwrap()).unwrap();
        let g = sample_tanner_graph(&seq, 5, Some(6), default_max_retries(400)).unwrap();
        assert!(girth(&g).unwrap() >= 6);
        assert_eq!(g.variable_degrees(), seq.variable_degrees);
        assert_eq!(g.check_degrees(), seq.check_degrees);
        let again = sample_tanner_graph(&seq, 5, Some(6), default_max_retries(400)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn impossible_girth_reports_reason() {
        // Two degree-2 variables on two checks can only form a 4-cycle.
        let seq = DegreeSequencePair::new(vec![2, 2], vec![2, 2]).unwrap();
        let err = sample_tanner_graph(&seq, 1, Some(6), 50).unwrap_err();
        assert!(matches!(err, EnsembleError::RetriesExhausted { attempts: 50, .. }));
    }
}
