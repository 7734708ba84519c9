//! Brute-force reference computations, for cross-checking only.
//!
//! Everything here enumerates raw assignments into `{0, ..., k}` and groups
//! them by the equivalence relation directly. Apart from [`Formula`] and the
//! evaluator it shares no code with the pattern machinery. Not a stable API.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::patterns::OrderPattern;
use crate::semantics::{is_true, LevelAssignment};

/// Largest number of raw assignments the oracle will enumerate.
pub const MAX_ASSIGNMENTS: u64 = 10_000_000;

fn guard(n: usize, k: usize) -> Result<u64> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("oracle needs n >= 1 and k >= 1".into()));
    }
    let total = (k as u64 + 1).checked_pow(n as u32).filter(|&t| t <= MAX_ASSIGNMENTS);
    total.ok_or_else(|| Error::ResourceLimit {
        what: "oracle enumeration",
        needed: format!("{}^{n} assignments", k + 1),
        limit: MAX_ASSIGNMENTS,
    })
}

/// Every assignment of `n` variables into `{0, ..., k}`.
fn assignments(n: usize, k: usize) -> Result<impl Iterator<Item = LevelAssignment>> {
    let total = guard(n, k)?;
    let base = k as u64 + 1;
    Ok((0..total).map(move |mut code| {
        let mut values = vec![0u32; n];
        for v in values.iter_mut() {
            *v = (code % base) as u32;
            code /= base;
        }
        LevelAssignment::new(k as u32, values).expect("levels within range")
    }))
}

/// Class key: for each variable, the rank of its value among the distinct
/// values of `{0, top} ∪ values`, plus the rank of `top`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    pub ranks: Vec<u32>,
    pub top_rank: u32,
}

impl ClassKey {
    pub fn of(a: &LevelAssignment) -> Self {
        let distinct: BTreeSet<u32> = a.values().iter().copied().chain([0, a.top()]).collect();
        let rank = |v: u32| distinct.range(..v).count() as u32;
        ClassKey { ranks: a.values().iter().map(|&v| rank(v)).collect(), top_rank: rank(a.top()) }
    }

    /// The same class as an [`OrderPattern`], for comparisons.
    pub fn to_pattern(&self) -> OrderPattern {
        OrderPattern::from_levels(self.ranks.clone(), self.top_rank - 1).expect("ranks are a valid pattern")
    }
}

/// Classes reached by `(k + 1)`-valued assignments, and those on which the
/// formula is true.
#[derive(Debug, Clone)]
pub struct ClassCensus {
    pub n: usize,
    pub k: usize,
    pub formula: Formula,
    pub classes: BTreeSet<ClassKey>,
    pub satisfied_classes: BTreeSet<ClassKey>,
}

pub fn census(f: &Formula, n: usize, k: usize) -> Result<ClassCensus> {
    if f.max_var() > n {
        return Err(Error::VariableOutOfRange { index: f.max_var(), n });
    }
    let mut classes = BTreeSet::new();
    let mut satisfied_classes = BTreeSet::new();
    for a in assignments(n, k)? {
        let key = ClassKey::of(&a);
        if is_true(f, &a)? {
            satisfied_classes.insert(key.clone());
        }
        classes.insert(key);
    }
    Ok(ClassCensus { n, k, formula: f.clone(), classes, satisfied_classes })
}

/// `χ_k(f)` by exhaustive enumeration of `(k + 1)`-valued assignments.
pub fn brute_chi(f: &Formula, n: usize, k: usize) -> Result<BigUint> {
    Ok(census(f, n, k)?.satisfied_classes.len().into())
}

/// Number of classes of `(k + 1)`-valued assignments over `n` variables.
pub fn brute_class_count(n: usize, k: usize) -> Result<BigUint> {
    let classes: BTreeSet<ClassKey> = assignments(n, k)?.map(|a| ClassKey::of(&a)).collect();
    Ok(classes.len().into())
}

/// Decides equivalence of two assignments straight from the definition:
/// sort the variables by the first assignment and compare the chains of
/// `<` / `=` relations `0 ⪯ v_σ(1) ⪯ ... ⪯ v_σ(n) ⪯ 1` for both.
pub fn brute_equivalence(a: &LevelAssignment, b: &LevelAssignment) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch { expected: a.n(), actual: b.n() });
    }
    if a.top() != b.top() {
        return Err(Error::InvalidArgument(format!("chains differ: top {} vs {}", a.top(), b.top())));
    }
    let mut order: Vec<usize> = (0..a.n()).collect();
    order.sort_by_key(|&i| a.values()[i]);
    let chain = |x: &LevelAssignment| -> Option<Vec<bool>> {
        let seq: Vec<u32> =
            std::iter::once(0).chain(order.iter().map(|&i| x.values()[i])).chain(std::iter::once(x.top())).collect();
        // `true` for strict, `false` for equal; None if the order breaks.
        seq.windows(2)
            .map(|w| match w[0].cmp(&w[1]) {
                std::cmp::Ordering::Less => Some(true),
                std::cmp::Ordering::Equal => Some(false),
                std::cmp::Ordering::Greater => None,
            })
            .collect()
    };
    Ok(match (chain(a), chain(b)) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn a(top: u32, values: &[u32]) -> LevelAssignment {
        LevelAssignment::new(top, values.to_vec()).unwrap()
    }

    #[test]
    fn brute_chi_examples() {
        assert_eq!(brute_chi(&p("~~X1"), 1, 2).unwrap(), 2u32.into());
        assert_eq!(brute_chi(&p("1"), 2, 2).unwrap(), 9u32.into());
        assert_eq!(brute_chi(&p("0"), 2, 3).unwrap(), 0u32.into());
    }

    #[test]
    fn class_counts() {
        assert_eq!(brute_class_count(1, 2).unwrap(), 3u32.into());
        assert_eq!(brute_class_count(3, 3).unwrap(), 45u32.into());
        assert_eq!(brute_class_count(2, 1).unwrap(), 4u32.into());
    }

    #[test]
    fn equivalence_examples() {
        assert!(brute_equivalence(&a(3, &[1, 2]), &a(3, &[1, 2])).unwrap());
        assert!(!brute_equivalence(&a(3, &[1, 2]), &a(3, &[2, 3])).unwrap());
        assert!(brute_equivalence(&a(2, &[0, 1]), &a(2, &[0, 1])).unwrap());
        assert!(!brute_equivalence(&a(2, &[0, 1]), &a(2, &[1, 0])).unwrap());
        assert!(!brute_equivalence(&a(3, &[1, 2]), &a(3, &[1, 3])).unwrap());
        assert!(brute_equivalence(&a(4, &[1, 1, 3]), &a(4, &[2, 2, 3])).unwrap());
        assert!(brute_equivalence(&a(4, &[1, 2]), &a(4, &[2, 3])).unwrap());
        assert!(brute_equivalence(&a(2, &[1, 1]), &a(2, &[1, 1])).unwrap());
        assert!(brute_equivalence(&a(1, &[1, 1]), &a(3, &[3, 3]).clone()).is_err());
        assert!(brute_equivalence(&a(1, &[1]), &a(1, &[1, 1])).is_err());
    }

    #[test]
    fn guard_trips() {
        assert!(matches!(brute_class_count(12, 5), Err(Error::ResourceLimit { .. })));
        assert!(brute_chi(&p("X3"), 2, 2).is_err());
    }

    #[test]
    fn keys_convert_to_patterns() {
        let key = ClassKey::of(&a(5, &[3, 0, 5, 3, 1]));
        assert_eq!(key.to_pattern().to_string(), "{2}|{5}|{1,4}|{3}");
    }
}
