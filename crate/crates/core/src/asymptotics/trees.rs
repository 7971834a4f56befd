use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::AsymptoticsError;
use crate::combinatorics::binomial;

/// Generalized Catalan number `C_j^{d_v} = binom(j(d_v-1), j-1) / j`: rooted
/// trees with `j` variables whose non-root variables all have degree `d_v`.
pub fn catalan_general(j: usize, d_v: usize) -> BigUint {
    if j == 0 {
        return BigUint::one();
    }
    let d_v = d_v.max(2) as u64;
    let j = j as u64;
    binomial(j * (d_v - 1), j - 1) / j
}

/// `C_0 … C_{j_max}` from the tree recursion
/// `C_j = Σ_{k_1+…+k_{d_v-1} = j-1} Π C_{k_t}` with `C_0 = C_1 = 1`.
///
/// Independent of the closed form; the tests check the two agree.
pub fn catalan_recursive(j_max: usize, d_v: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::one()];
    if j_max >= 1 {
        c.push(BigUint::one());
    }
    for j in 2..=j_max {
        let power = series_power(&c, d_v.max(2) - 1, j - 1);
        c.push(power[j - 1].clone());
    }
    c
}

/// `B_{j+1}^{d_v}`: basic trees with `j + 1` variables whose root has `d_v - 2`
/// free edges. Equal to `Σ_{k_1+…+k_{d_v-2} = j} Π C_{k_t}^{d_v}`.
pub fn basic_tree_count_b(j_plus_1: usize, d_v: usize) -> Result<BigUint, AsymptoticsError> {
    if d_v < 3 {
        return Err(AsymptoticsError::Domain(format!(
            "basic trees need d_v >= 3, got {d_v}"
        )));
    }
    if j_plus_1 == 0 {
        return Err(AsymptoticsError::Domain("basic trees have at least one variable".into()));
    }
    let j = j_plus_1 - 1;
    let c: Vec<BigUint> = (0..=j).map(|k| catalan_general(k, d_v)).collect();
    Ok(series_power(&c, d_v - 2, j)[j].clone())
}

/// Coefficients `0..=len` of `(Σ coeffs[k] x^k)^exponent`, truncated.
fn series_power(coeffs: &[BigUint], exponent: usize, len: usize) -> Vec<BigUint> {
    let mut acc = vec![BigUint::zero(); len + 1];
    acc[0] = BigUint::one();
    for _ in 0..exponent {
        let mut next = vec![BigUint::zero(); len + 1];
        for (p, x) in acc.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in coeffs.iter().enumerate().take(len + 1 - p) {
                next[p + q] += x * y;
            }
        }
        acc = next;
    }
    acc
}

/// Memoized `C_j^{d_v}` and `B_{j+1}^{d_v}` for one `d_v`, `j = 0..=j_max`.
#[derive(Clone, Debug)]
pub struct TreeCountTable {
    d_v: usize,
    catalan: Vec<BigUint>,
    basic: Vec<BigUint>,
}

impl TreeCountTable {
    pub fn new(d_v: usize, j_max: usize) -> Result<Self, AsymptoticsError> {
        if d_v < 3 {
            return Err(AsymptoticsError::Domain(format!(
                "tree tables need d_v >= 3, got {d_v}"
            )));
        }
        // One extra Catalan entry so the upper form can read C_{j+1}.
        let catalan: Vec<BigUint> = (0..=j_max + 1).map(|j| catalan_general(j, d_v)).collect();
        let basic = series_power(&catalan[..=j_max], d_v - 2, j_max);
        Ok(TreeCountTable { d_v, catalan, basic })
    }

    pub fn d_v(&self) -> usize {
        self.d_v
    }

    pub fn j_max(&self) -> usize {
        self.basic.len() - 1
    }

    /// `C_j^{d_v}`, for `j <= j_max + 1`.
    pub fn c(&self, j: usize) -> &BigUint {
        &self.catalan[j]
    }

    /// `B_{j+1}^{d_v}`.
    pub fn b(&self, j: usize) -> &BigUint {
        &self.basic[j]
    }

    /// `R(j, d_v, d_c) = (d_c - 1)^j B_{j+1}^{d_v}`: choices for a basic tree
    /// of `j + 1` variables hung from one cycle variable.
    pub fn r(&self, j: usize, d_c: usize) -> BigUint {
        BigUint::from(d_c.saturating_sub(1)).pow(j as u32) * &self.basic[j]
    }
}
