//! Exact counts of join-irreducibles by height.
//!
//! `T(n, k)` is the number of elements of height `k` in the tallest tree of
//! the forest for `n` variables:
//!
//! ```text
//! T(n, 1) = 1
//! T(n, k) = 0                                   if k > n + 1
//! T(n, k) = Σ_{i=1..n} C(n, i) · T(n - i, k - 1)  otherwise
//! ```
//!
//! and `P(n, k) = Σ_{i=1..k} Σ_{j=0..n} C(n, j) · T(j, i)` counts all
//! join-irreducibles (equivalently, all order patterns) of height at most `k`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Memo table for binomials, `T` and `P`. Not shareable across threads while
/// it is being filled; clone a filled table for concurrent readers.
#[derive(Debug, Clone, Default)]
pub struct CountTable {
    pascal: Vec<Vec<BigUint>>,
    tree: HashMap<(usize, usize), BigUint>,
    patterns: HashMap<(usize, usize), BigUint>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn binomial(&mut self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        while self.pascal.len() <= n {
            let row = match self.pascal.last() {
                None => vec![BigUint::one()],
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    row.push(BigUint::one());
                    row.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
                    row.push(BigUint::one());
                    row
                }
            };
            self.pascal.push(row);
        }
        self.pascal[n][k].clone()
    }

    /// `T(n, k)`. Heights start at 1, so `T(n, 0) = 0`.
    pub fn tree(&mut self, n: usize, k: usize) -> BigUint {
        if k == 0 || k > n + 1 {
            return BigUint::zero();
        }
        if k == 1 {
            return BigUint::one();
        }
        if let Some(v) = self.tree.get(&(n, k)) {
            return v.clone();
        }
        let mut sum = BigUint::zero();
        for i in 1..=n {
            sum += self.binomial(n, i) * self.tree(n - i, k - 1);
        }
        self.tree.insert((n, k), sum.clone());
        sum
    }

    /// `P(n, k)`. Constant in `k` once `k >= n + 1`.
    pub fn patterns(&mut self, n: usize, k: usize) -> BigUint {
        let k = k.min(n + 1);
        if let Some(v) = self.patterns.get(&(n, k)) {
            return v.clone();
        }
        let mut sum = BigUint::zero();
        for i in 1..=k {
            for j in 0..=n {
                sum += self.binomial(n, j) * self.tree(j, i);
            }
        }
        self.patterns.insert((n, k), sum.clone());
        sum
    }

    /// Rows `n = 1..=max_n`, columns `k = 1..=max_k` of `P`.
    pub fn pattern_table(&mut self, max_n: usize, max_k: usize) -> Vec<Vec<BigUint>> {
        (1..=max_n).map(|n| (1..=max_k).map(|k| self.patterns(n, k)).collect()).collect()
    }

    /// Rows `n = 1..=max_n`, columns `k = 1..=max_k` of `T`.
    pub fn tree_table(&mut self, max_n: usize, max_k: usize) -> Vec<Vec<BigUint>> {
        (1..=max_n).map(|n| (1..=max_k).map(|k| self.tree(n, k)).collect()).collect()
    }
}

pub fn tree_count(n: usize, k: usize) -> BigUint {
    CountTable::new().tree(n, k)
}

pub fn pattern_count(n: usize, k: usize) -> BigUint {
    CountTable::new().patterns(n, k)
}

/// `P(n, k)` for `1 <= n <= max_n`, `1 <= k <= max_k`.
pub fn table(max_n: usize, max_k: usize) -> Vec<Vec<BigUint>> {
    CountTable::new().pattern_table(max_n, max_k)
}

/// Number of join-irreducibles for `n` variables, `P(n, n + 1)`; this is
/// also the dimension of the space of valuations.
pub fn join_irreducible_count(n: usize) -> BigUint {
    pattern_count(n, n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn tree_examples() {
        assert_eq!(tree_count(0, 1), big(1));
        assert_eq!(tree_count(1, 2), big(1));
        assert_eq!(tree_count(2, 2), big(3));
        assert_eq!(tree_count(2, 4), big(0));
        assert_eq!(tree_count(3, 0), big(0));
    }

    #[test]
    fn pattern_examples() {
        assert_eq!(pattern_count(2, 2), big(9));
        assert_eq!(pattern_count(6, 3), big(3431));
        assert_eq!(pattern_count(9, 7), big(20214483));
    }

    #[test]
    fn table_rows() {
        assert_eq!(table(1, 1), vec![vec![big(2)]]);
        assert_eq!(table(2, 7)[1], [4, 9, 11, 11, 11, 11, 11].map(big));
        assert_eq!(table(5, 5)[4], [32, 243, 813, 1563, 2043].map(big));
    }

    #[test]
    fn tree_table_small() {
        assert_eq!(CountTable::new().tree_table(2, 2), vec![vec![big(1), big(1)], vec![big(1), big(3)]]);
    }

    #[test]
    fn first_column_is_power_of_two() {
        let mut t = CountTable::new();
        for n in 0..40 {
            assert_eq!(t.patterns(n, 1), BigUint::one() << n);
        }
    }

    #[test]
    fn monotone_and_stable_in_k() {
        let mut t = CountTable::new();
        for n in 1..12 {
            for k in 1..n + 4 {
                assert!(t.patterns(n, k) <= t.patterns(n, k + 1));
            }
            assert_eq!(t.patterns(n, n + 1), t.patterns(n, n + 7));
            assert!(t.patterns(n, n) < t.patterns(n, n + 1));
        }
    }

    #[test]
    fn tree_sizes_compose_to_forest_size() {
        let mut t = CountTable::new();
        for n in 0..10 {
            let tree_size = |t: &mut CountTable, j: usize| -> BigUint { (1..=j + 1).map(|k| t.tree(j, k)).sum() };
            let mut forest = BigUint::zero();
            for j in 0..=n {
                let size = tree_size(&mut t, j);
                forest += t.binomial(n, j) * size;
            }
            assert_eq!(forest, t.patterns(n, n + 1));
        }
    }

    #[test]
    fn large_counts_exceed_u64() {
        let v = pattern_count(30, 31);
        assert!(v > BigUint::from(u64::MAX));
    }
}
