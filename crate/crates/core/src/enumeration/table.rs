use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::structures::Category;

/// Structure counts keyed by `(category, a, b)`, iterated in ascending key
/// order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    entries: BTreeMap<(Category, usize, usize), u64>,
    pub a_max: usize,
    pub b_max: usize,
}

impl MultiplicityTable {
    pub fn new(a_max: usize, b_max: usize) -> Self {
        MultiplicityTable { entries: BTreeMap::new(), a_max, b_max }
    }

    pub fn add(&mut self, category: Category, a: usize, b: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((category, a, b)).or_insert(0) += count;
        }
    }

    pub fn get(&self, category: Category, a: usize, b: usize) -> u64 {
        self.entries.get(&(category, a, b)).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &MultiplicityTable) {
        for (&(c, a, b), &n) in &other.entries {
            self.add(c, a, b, n);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Category, usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Only the rows of `category`.
    pub fn restrict(&self, category: Category) -> MultiplicityTable {
        let mut out = MultiplicityTable::new(self.a_max, self.b_max);
        for ((c, a, b), n) in self.iter().filter(|((c, _, _), _)| *c == category) {
            out.add(c, a, b, n);
        }
        out
    }

    /// Sum of counts for `category` over all `b`, at size `a`.
    pub fn total(&self, category: Category, a: usize) -> u64 {
        self.iter().filter(|((c, x, _), _)| *c == category && *x == a).map(|(_, n)| n).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("category,a,b,count\n");
        for ((c, a, b), n) in self.iter() {
            let _ = writeln!(out, "{c},{a},{b},{n}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_is_sorted() {
        let mut t = MultiplicityTable::new(5, 5);
        t.add(Category::Lets, 3, 3, 2);
        t.add(Category::Ss, 4, 0, 1);
        t.add(Category::Lets, 2, 2, 1);
        t.add(Category::Lets, 3, 3, 1);
        t.add(Category::Abs, 9, 9, 0);
        assert_eq!(t.to_csv(), "category,a,b,count\nSS,4,0,1\nLETS,2,2,1\nLETS,3,3,3\n");
        assert_eq!(t.restrict(Category::Lets).len(), 2);
    }
}
