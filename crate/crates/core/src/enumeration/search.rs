use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::adjacency::VarGraph;
use super::cycles::{for_each_cycle, DEFAULT_CYCLE_CAP};
use super::{EnumerationError, MultiplicityTable};
use crate::ensemble::TannerGraph;
use crate::structures::Category;

/// Largest structure size the search accepts.
pub const A_MAX_CAP: usize = 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Cycle-seeded growth when every requested category forces a cycle,
    /// plain connected expansion otherwise.
    #[default]
    Auto,
    /// Grow every connected set from its smallest variable.
    Expansion,
    /// Grow connected supersets of the variable sets of short cycles.
    /// Only complete for SS, LETS, ABS and EABS on graphs with no degree-1
    /// variables, where every member contains a cycle of length at most `2a`.
    CycleSeeded,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of visited variable sets before giving up.
    pub budget: u64,
    /// Keep every recorded set and fail on a repeat.
    pub verify_unique: bool,
    pub strategy: Strategy,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 20_000_000_000, verify_unique: false, strategy: Strategy::Auto }
    }
}

/// Count connected structures of one category with `a <= a_max`, `b <= b_max`.
pub fn enumerate_structures(
    graph: &TannerGraph,
    category: Category,
    a_max: usize,
    b_max: usize,
) -> Result<MultiplicityTable, EnumerationError> {
    census(graph, &[category], a_max, b_max, &SearchOptions::default())
}

const fn bit(c: Category) -> u8 {
    1 << c as u8
}

const CYCLE_FORCING: u8 = bit(Category::Ss) | bit(Category::Lets) | bit(Category::Abs) | bit(Category::Eabs);

/// Count connected structures of several categories in one pass. Structures
/// with `b > b_max` are classified but not recorded.
pub fn census(
    graph: &TannerGraph,
    categories: &[Category],
    a_max: usize,
    b_max: usize,
    options: &SearchOptions,
) -> Result<MultiplicityTable, EnumerationError> {
    search(graph, categories, a_max, b_max, options, false).map(|(table, _)| table)
}

/// A recorded structure: sorted variable ids, `b` and the requested
/// categories it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundStructure {
    pub variables: Vec<u32>,
    pub b: usize,
    pub categories: Vec<Category>,
}

/// Like [`census`], but return every recorded structure, ordered by size and
/// then by variable ids.
pub fn list_structures(
    graph: &TannerGraph,
    categories: &[Category],
    a_max: usize,
    b_max: usize,
    options: &SearchOptions,
) -> Result<Vec<FoundStructure>, EnumerationError> {
    let (_, found) = search(graph, categories, a_max, b_max, options, true)?;
    let mut out: Vec<FoundStructure> = found
        .into_iter()
        .map(|(variables, (b, mask))| FoundStructure {
            variables,
            b: b as usize,
            categories: Category::ALL.into_iter().filter(|&c| mask & bit(c) != 0).collect(),
        })
        .collect();
    out.sort_by(|x, y| (x.variables.len(), &x.variables).cmp(&(y.variables.len(), &y.variables)));
    Ok(out)
}

type Found = HashMap<Vec<u32>, (u16, u8)>;

fn search(
    graph: &TannerGraph,
    categories: &[Category],
    a_max: usize,
    b_max: usize,
    options: &SearchOptions,
    keep_sets: bool,
) -> Result<(MultiplicityTable, Found), EnumerationError> {
    if a_max > A_MAX_CAP {
        return Err(EnumerationError::SizeCap { a_max, cap: A_MAX_CAP });
    }
    let mut table = MultiplicityTable::new(a_max, b_max);
    let wanted = categories.iter().fold(0u8, |m, &c| m | bit(c));
    if wanted == 0 || a_max == 0 || graph.n() == 0 {
        return Ok((table, Found::new()));
    }
    let seeded = match options.strategy {
        Strategy::Auto => wanted & !CYCLE_FORCING == 0 && graph.min_variable_degree() >= 2,
        Strategy::Expansion => false,
        Strategy::CycleSeeded => true,
    };
    let vg = VarGraph::new(graph);
    let shared = Shared {
        graph,
        vg: &vg,
        a_max,
        b_max,
        b_cap: b_max.min(a_max * graph.max_variable_degree()),
        dv_max: graph.max_variable_degree(),
        wanted,
        elementary_only: Category::ALL.iter().all(|&c| wanted & bit(c) == 0 || c.is_elementary()),
        needs_scan: wanted & (bit(Category::Lets) | bit(Category::Abs) | bit(Category::Eabs)) != 0,
        budget: options.budget,
        visits: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        level: AtomicUsize::new(0),
    };

    let result = if seeded {
        if a_max < 2 {
            return Ok((table, Found::new()));
        }
        let mut seeds: Vec<Vec<u32>> = Vec::new();
        for_each_cycle(graph, 2 * a_max, DEFAULT_CYCLE_CAP, |vars, _, _| {
            let mut key = vars.to_vec();
            key.sort_unstable();
            seeds.push(key);
        })?;
        seeds.sort_unstable();
        seeds.dedup();
        seeds
            .par_iter()
            .fold(
                || Searcher::new(&shared, Keep::Dedupe),
                |mut s, seed| {
                    s.run_seed(seed);
                    s
                },
            )
            .map(Searcher::finish)
            .reduce(Partial::default, Partial::merge)
    } else {
        (0..graph.n() as u32)
            .into_par_iter()
            .fold(
                || Searcher::new(&shared, if options.verify_unique || keep_sets { Keep::Verify } else { Keep::Count }),
                |mut s, root| {
                    s.run_root(root);
                    s
                },
            )
            .map(Searcher::finish)
            .reduce(Partial::default, Partial::merge)
    };

    if let Some(dup) = result.duplicate {
        return Err(EnumerationError::Duplicate(dup));
    }
    let stride_b = shared.b_cap + 1;
    for (idx, &n) in result.counts.iter().enumerate() {
        if n > 0 {
            let b = idx % stride_b;
            let a = (idx / stride_b) % (a_max + 1);
            let c = Category::ALL[idx / stride_b / (a_max + 1)];
            table.add(c, a, b, n);
        }
    }
    for (key, (b, mask)) in &result.found {
        for c in Category::ALL {
            if mask & bit(c) != 0 {
                table.add(c, key.len(), *b as usize, 1);
            }
        }
    }
    if shared.stop.load(Ordering::Relaxed) {
        return Err(EnumerationError::BudgetExceeded {
            budget: options.budget,
            level: shared.level.load(Ordering::Relaxed),
            partial: Box::new(table),
        });
    }
    Ok((table, result.found))
}

struct Shared<'g> {
    graph: &'g TannerGraph,
    vg: &'g VarGraph,
    a_max: usize,
    b_max: usize,
    b_cap: usize,
    dv_max: usize,
    wanted: u8,
    elementary_only: bool,
    needs_scan: bool,
    budget: u64,
    visits: AtomicU64,
    stop: AtomicBool,
    level: AtomicUsize,
}

#[derive(Default)]
struct Partial {
    counts: Vec<u64>,
    /// Recorded sets keyed by sorted ids, with `b` and category mask.
    found: Found,
    duplicate: Option<Vec<u32>>,
    verify: bool,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        if self.counts.len() < other.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (x, y) in self.counts.iter_mut().zip(&other.counts) {
            *x += y;
        }
        let verify = self.verify || other.verify;
        let (mut big, small) = if self.found.len() >= other.found.len() {
            (self.found, other.found)
        } else {
            (other.found, self.found)
        };
        for (key, value) in small {
            if big.insert(key.clone(), value).is_some() && verify {
                self.duplicate.get_or_insert(key);
            }
        }
        self.found = big;
        self.verify = verify;
        self.duplicate = self.duplicate.or(other.duplicate);
        self
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Keep {
    /// Tally counts only.
    Count,
    /// Keep recorded sets and skip repeats (cycle-seeded growth).
    Dedupe,
    /// Keep recorded sets and fail on a repeat.
    Verify,
}

/// Per-worker search state. Check counts and cover counts are maintained
/// incrementally as variables enter and leave the current set.
struct Searcher<'s, 'g> {
    sh: &'s Shared<'g>,
    in_set: Vec<bool>,
    /// Number of current members adjacent to each variable.
    cover: Vec<u16>,
    /// Induced degree of each check.
    degree: Vec<u8>,
    members: Vec<u32>,
    b: usize,
    ones: usize,
    over2: usize,
    ext: Vec<u32>,
    local_visits: u64,
    keep: Keep,
    part: Partial,
    key: Vec<u32>,
}

impl<'s, 'g> Searcher<'s, 'g> {
    fn new(sh: &'s Shared<'g>, keep: Keep) -> Self {
        let counts = vec![0; Category::ALL.len() * (sh.a_max + 1) * (sh.b_cap + 1)];
        Searcher {
            sh,
            in_set: vec![false; sh.graph.n()],
            cover: vec![0; sh.graph.n()],
            degree: vec![0; sh.graph.n_checks()],
            members: Vec::with_capacity(sh.a_max),
            b: 0,
            ones: 0,
            over2: 0,
            ext: Vec::new(),
            local_visits: 0,
            keep,
            part: Partial { counts, verify: keep == Keep::Verify, ..Partial::default() },
            key: Vec::with_capacity(sh.a_max),
        }
    }

    fn finish(self) -> Partial {
        self.sh.visits.fetch_add(self.local_visits, Ordering::Relaxed);
        self.part
    }

    fn stopped(&self) -> bool {
        self.sh.stop.load(Ordering::Relaxed) || self.part.duplicate.is_some()
    }

    fn run_root(&mut self, root: u32) {
        if self.stopped() {
            return;
        }
        self.add(root);
        self.ext.clear();
        let vg = self.sh.vg;
        self.ext.extend(vg.neighbors(root as usize).iter().copied().filter(|&u| u > root));
        let len = self.ext.len();
        self.extend(0, len, Some(root));
        self.remove(root);
    }

    fn run_seed(&mut self, seed: &[u32]) {
        if self.stopped() || seed.len() > self.sh.a_max {
            return;
        }
        for &v in seed {
            self.add(v);
        }
        if !(self.sh.elementary_only && self.over2 > 0) {
            self.ext.clear();
            let vg = self.sh.vg;
            for &v in seed {
                for &u in vg.neighbors(v as usize) {
                    if !self.in_set[u as usize] {
                        self.ext.push(u);
                    }
                }
            }
            self.ext.sort_unstable();
            self.ext.dedup();
            let len = self.ext.len();
            self.extend(0, len, None);
        }
        for &v in seed.iter().rev() {
            self.remove(v);
        }
    }

    /// Visit the current set, then every connected superset reachable by the
    /// extension candidates `ext[lo..hi]`. Returns `false` to abort.
    fn extend(&mut self, lo: usize, hi: usize, root: Option<u32>) -> bool {
        if !self.visit() {
            return false;
        }
        let k = self.members.len();
        let sh = self.sh;
        if k == sh.a_max || self.b > sh.b_max + (sh.a_max - k) * sh.dv_max {
            return true;
        }
        let vg = sh.vg;
        let mut i = hi;
        while i > lo {
            i -= 1;
            let w = self.ext[i];
            if sh.elementary_only && self.breaks_elementary(w) {
                continue;
            }
            let start = self.ext.len();
            self.ext.extend_from_within(lo..i);
            for &u in vg.neighbors(w as usize) {
                if !self.in_set[u as usize] && self.cover[u as usize] == 0 && root.is_none_or(|r| u > r) {
                    self.ext.push(u);
                }
            }
            let end = self.ext.len();
            self.add(w);
            let ok = self.extend(start, end, root);
            self.remove(w);
            self.ext.truncate(start);
            if !ok {
                return false;
            }
        }
        true
    }

    fn breaks_elementary(&self, w: u32) -> bool {
        self.sh.graph.checks_of(w as usize).iter().any(|&c| self.degree[c as usize] >= 2)
    }

    fn add(&mut self, v: u32) {
        self.in_set[v as usize] = true;
        self.members.push(v);
        for &c in self.sh.graph.checks_of(v as usize) {
            let d = &mut self.degree[c as usize];
            *d += 1;
            match *d {
                1 => self.ones += 1,
                2 => self.ones -= 1,
                3 => self.over2 += 1,
                _ => {}
            }
            if *d % 2 == 1 {
                self.b += 1;
            } else {
                self.b -= 1;
            }
        }
        for &u in self.sh.vg.neighbors(v as usize) {
            self.cover[u as usize] += 1;
        }
    }

    fn remove(&mut self, v: u32) {
        self.in_set[v as usize] = false;
        self.members.pop();
        for &c in self.sh.graph.checks_of(v as usize) {
            let d = &mut self.degree[c as usize];
            match *d {
                1 => self.ones -= 1,
                2 => self.ones += 1,
                3 => self.over2 -= 1,
                _ => {}
            }
            if *d % 2 == 1 {
                self.b -= 1;
            } else {
                self.b += 1;
            }
            *d -= 1;
        }
        for &u in self.sh.vg.neighbors(v as usize) {
            self.cover[u as usize] -= 1;
        }
    }

    /// Category membership of the current set, restricted to the wanted ones.
    fn categories(&self) -> u8 {
        let sh = self.sh;
        let ets = self.over2 == 0;
        let mut mask = bit(Category::Ts);
        if self.ones == 0 {
            mask |= bit(Category::Ss);
        }
        if ets {
            mask |= bit(Category::Ets);
        }
        if sh.needs_scan {
            let mut leafless = ets && sh.wanted & bit(Category::Lets) != 0;
            let mut absorbing = sh.wanted & (bit(Category::Abs) | bit(Category::Eabs)) != 0;
            for &v in &self.members {
                if !leafless && !absorbing {
                    break;
                }
                let (mut odd, mut even, mut sat2) = (0, 0, 0);
                for &c in sh.graph.checks_of(v as usize) {
                    let d = self.degree[c as usize];
                    if d % 2 == 1 {
                        odd += 1;
                    } else {
                        even += 1;
                        sat2 += (d == 2) as usize;
                    }
                }
                leafless &= sat2 >= 2;
                absorbing &= even > odd;
            }
            if leafless {
                mask |= bit(Category::Lets);
            }
            if absorbing {
                mask |= bit(Category::Abs);
                if ets {
                    mask |= bit(Category::Eabs);
                }
            }
        }
        mask & sh.wanted
    }

    fn visit(&mut self) -> bool {
        let sh = self.sh;
        self.local_visits += 1;
        if self.local_visits.is_multiple_of(4096) {
            let total = sh.visits.fetch_add(4096, Ordering::Relaxed) + 4096;
            self.local_visits -= 4096;
            if total > sh.budget && !sh.stop.swap(true, Ordering::Relaxed) {
                sh.level.store(self.members.len(), Ordering::Relaxed);
            }
        }
        if self.stopped() {
            return false;
        }
        if self.b > sh.b_max {
            return true;
        }
        let mask = self.categories();
        if mask == 0 {
            return true;
        }
        let a = self.members.len();
        if self.keep != Keep::Count {
            self.key.clear();
            self.key.extend_from_slice(&self.members);
            self.key.sort_unstable();
            if self.part.found.contains_key(&self.key) {
                if self.keep == Keep::Verify {
                    self.part.duplicate = Some(self.key.clone());
                    return false;
                }
                return true;
            }
            self.part.found.insert(self.key.clone(), (self.b as u16, mask));
            return true;
        }
        let stride_b = sh.b_cap + 1;
        for c in Category::ALL {
            if mask & bit(c) != 0 {
                self.part.counts[((c as usize) * (sh.a_max + 1) + a) * stride_b + self.b] += 1;
            }
        }
        true
    }
}
