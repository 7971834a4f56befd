use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{StructureError, StructureInstance};
use crate::ensemble::TannerGraph;

/// Trapping-set categories, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Category {
    Ts,
    Ss,
    Ets,
    Lets,
    Abs,
    Eabs,
}

impl Category {
    pub const ALL: [Category; 6] =
        [Category::Ts, Category::Ss, Category::Ets, Category::Lets, Category::Abs, Category::Eabs];

    pub fn name(self) -> &'static str {
        match self {
            Category::Ts => "TS",
            Category::Ss => "SS",
            Category::Ets => "ETS",
            Category::Lets => "LETS",
            Category::Abs => "ABS",
            Category::Eabs => "EABS",
        }
    }

    /// Categories whose members have every induced check of degree 1 or 2.
    pub fn is_elementary(self) -> bool {
        matches!(self, Category::Ets | Category::Lets | Category::Eabs)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Category {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| StructureError::UnknownCategory(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CategorySet {
    pub is_ts: bool,
    pub is_ss: bool,
    pub is_ets: bool,
    pub is_lets: bool,
    pub is_abs: bool,
    pub is_eabs: bool,
}

impl CategorySet {
    pub fn contains(&self, category: Category) -> bool {
        match category {
            Category::Ts => self.is_ts,
            Category::Ss => self.is_ss,
            Category::Ets => self.is_ets,
            Category::Lets => self.is_lets,
            Category::Abs => self.is_abs,
            Category::Eabs => self.is_eabs,
        }
    }

    pub fn members(&self) -> impl Iterator<Item = Category> + '_ {
        Category::ALL.into_iter().filter(|&c| self.contains(c))
    }
}

/// Apply the category definitions to an induced subgraph.
///
/// The graph is consulted only for variable degrees, which are needed to
/// count each variable's satisfied and unsatisfied neighbors.
pub fn classify(inst: &StructureInstance, graph: &TannerGraph) -> CategorySet {
    let mut degree = std::collections::HashMap::with_capacity(inst.check_count());
    for &(_, w) in &inst.induced_edges {
        *degree.entry(w).or_insert(0usize) += 1;
    }
    let is_ss = degree.values().all(|&d| d >= 2);
    let is_ets = degree.values().all(|&d| d <= 2);
    let mut leafless = true;
    let mut absorbing = true;
    for &v in &inst.variables {
        let (mut odd, mut even, mut satisfied2) = (0, 0, 0);
        for &w in graph.checks_of(v) {
            let d = degree[&(w as usize)];
            if d % 2 == 1 {
                odd += 1;
            } else {
                even += 1;
                if d == 2 {
                    satisfied2 += 1;
                }
            }
        }
        leafless &= satisfied2 >= 2;
        absorbing &= even > odd;
    }
    CategorySet {
        is_ts: true,
        is_ss,
        is_ets,
        is_lets: is_ets && leafless,
        is_abs: absorbing,
        is_eabs: absorbing && is_ets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::induce;

    #[test]
    fn figure_one_a_is_ets_not_lets() {
        // Two degree-3 variables sharing check 0, each with two private checks.
        let g = TannerGraph::from_edges(2, 5, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 3), (1, 4)]).unwrap();
        let inst = induce(&g, &[0, 1]).unwrap();
        assert_eq!((inst.a, inst.b), (2, 4));
        let cats = classify(&inst, &g);
        assert!(cats.is_ets && !cats.is_lets && !cats.is_ss && !cats.is_abs);
    }

    #[test]
    fn degree_two_cycle_is_everything() {
        let g = TannerGraph::from_edges(3, 3, &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]).unwrap();
        let cats = classify(&induce(&g, &[0, 1, 2]).unwrap(), &g);
        assert_eq!(cats.members().count(), 6);
    }

    #[test]
    fn parse_names() {
        assert_eq!("lets".parse::<Category>().unwrap(), Category::Lets);
        assert!("FABS".parse::<Category>().is_err());
    }
}
