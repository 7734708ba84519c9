//! Generalised Euler characteristics `χ_k` of formulas, and the tautology
//! tests they give rise to.
//!
//! For `φ` over `n` variables, `χ_k(φ)` counts the join-irreducibles `g` of
//! height at most `k` lying below the class of `φ`. Identifying
//! join-irreducibles with order patterns, that is the number of patterns of
//! height at most `k` whose canonical assignment makes `φ` true, i.e. the
//! number of `(k + 1)`-valued assignments satisfying `φ` up to equivalence.
//! `φ` is a tautology of the `(k + 1)`-valued logic exactly when this count
//! reaches `P(n, k)`, and a tautology of infinite-valued Gödel logic exactly
//! when `χ_{n+1}(φ) = P(n, n + 1)`.
//!
//! Counting walks the pattern space in parallel slices (see
//! [`patterns::work_units`](crate::patterns)) and sums per slice.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::counting::CountTable;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::patterns::{work_units, OrderPattern};
use crate::semantics::{self, CompiledFormula};

fn check_vars(f: &CompiledFormula, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("number of variables must be at least 1".into()));
    }
    f.check_arity(n)
}

/// Number of satisfying patterns of each height `1..=max_height`
/// (index 0 holds height 1).
fn satisfied_by_height(f: &CompiledFormula, n: usize, max_height: usize) -> Vec<u64> {
    let max_height = max_height.min(n + 1);
    work_units(n, max_height)
        .into_par_iter()
        .map(|mut cursor| {
            let mut hist = vec![0u64; max_height];
            let mut stack = Vec::new();
            while cursor.advance() {
                let top = cursor.inner() + 1;
                if f.eval_levels(cursor.levels(), top, &mut stack) == top {
                    hist[cursor.inner() as usize] += 1;
                }
            }
            hist
        })
        .reduce(
            || vec![0u64; max_height],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// `χ_k(f)` relative to `n` variables. `k > n + 1` is treated as `n + 1`.
pub fn chi(f: &Formula, n: usize, k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let compiled = CompiledFormula::new(f);
    check_vars(&compiled, n)?;
    Ok(satisfied_by_height(&compiled, n, k).iter().sum::<u64>().into())
}

/// The first pattern (in enumeration order) of height at most `k` whose
/// assignments do not make `f` true, if any.
pub fn countermodel(f: &Formula, n: usize, k: usize) -> Result<Option<OrderPattern>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let compiled = CompiledFormula::new(f);
    check_vars(&compiled, n)?;
    Ok(work_units(n, k).into_par_iter().find_map_first(|mut cursor| {
        let mut stack = Vec::new();
        while cursor.advance() {
            let top = cursor.inner() + 1;
            if compiled.eval_levels(cursor.levels(), top, &mut stack) != top {
                return Some(
                    OrderPattern::from_levels(cursor.levels().to_vec(), cursor.inner())
                        .expect("cursor yields valid patterns"),
                );
            }
        }
        None
    }))
}

/// Tautology in the `(k + 1)`-valued Gödel logic, i.e. `χ_k(f) = P(n, k)`.
pub fn is_tautology_gk(f: &Formula, n: usize, k: usize) -> Result<bool> {
    Ok(countermodel(f, n, k)?.is_none())
}

/// Tautology in infinite-valued Gödel logic, i.e. `χ_{n+1}(f) = P(n, n + 1)`.
pub fn is_tautology_ginf(f: &Formula, n: usize) -> Result<bool> {
    is_tautology_gk(f, n, n + 1)
}

/// Logical equivalence over `n` variables: `f` and `g` agree on every
/// pattern of height at most `n + 1`.
pub fn equivalent(f: &Formula, g: &Formula, n: usize) -> Result<bool> {
    let (cf, cg) = (CompiledFormula::new(f), CompiledFormula::new(g));
    check_vars(&cf, n)?;
    check_vars(&cg, n)?;
    let differs = work_units(n, n + 1).into_par_iter().any(|mut cursor| {
        let mut stack = Vec::new();
        while cursor.advance() {
            let top = cursor.inner() + 1;
            if cf.eval_levels(cursor.levels(), top, &mut stack) != cg.eval_levels(cursor.levels(), top, &mut stack) {
                return true;
            }
        }
        false
    });
    Ok(!differs)
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn decimals<S: Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn formula_text<S: Serializer>(f: &Formula, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(f)
}

/// All characteristics `χ_1..χ_{n+1}` of a formula plus the verdicts they
/// imply. Serializes to the JSON report format, with big integers as
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiReport {
    #[serde(serialize_with = "formula_text")]
    pub formula: Formula,
    pub n: usize,
    /// `chi[k - 1] = χ_k`.
    #[serde(serialize_with = "decimals")]
    pub chi: Vec<BigUint>,
    /// `p[k - 1] = P(n, k)`.
    #[serde(serialize_with = "decimals", rename = "p")]
    pub p_row: Vec<BigUint>,
    #[serde(serialize_with = "decimal", rename = "boolean_models")]
    pub boolean_model_count: BigUint,
    pub classical_tautology: bool,
    pub classical_contradiction: bool,
    pub godel_infinity_tautology: bool,
    /// Smallest `k` with `χ_k < P(n, k)`.
    pub least_k_not_tautology: Option<usize>,
}

impl ChiReport {
    pub fn verdict(&self) -> Verdict {
        if self.godel_infinity_tautology {
            Verdict::GodelTautology
        } else if self.classical_contradiction {
            Verdict::Contradiction
        } else if !self.classical_tautology {
            Verdict::Satisfiable
        } else {
            Verdict::FiniteValuedOnly { last_k: self.least_k_not_tautology.expect("not a G_inf tautology") - 1 }
        }
    }
}

/// Coarse classification of a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    GodelTautology,
    /// Tautology of `G_{k+1}` for every `k <= last_k`, but not beyond.
    FiniteValuedOnly {
        last_k: usize,
    },
    /// Satisfiable but not a classical tautology.
    Satisfiable,
    Contradiction,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::GodelTautology => f.write_str("tautology of G_inf"),
            Verdict::FiniteValuedOnly { last_k } => {
                write!(f, "tautology of G_{} but not of G_{}", last_k + 1, last_k + 2)
            }
            Verdict::Satisfiable => f.write_str("satisfiable, not a classical tautology"),
            Verdict::Contradiction => f.write_str("classical contradiction"),
        }
    }
}

/// The full report for `f` over `n` variables.
pub fn chi_vector(f: &Formula, n: usize) -> Result<ChiReport> {
    let compiled = CompiledFormula::new(f);
    check_vars(&compiled, n)?;
    let hist = satisfied_by_height(&compiled, n, n + 1);
    let chi: Vec<BigUint> = hist
        .iter()
        .scan(0u64, |acc, &h| {
            *acc += h;
            Some(BigUint::from(*acc))
        })
        .collect();
    let mut counts = CountTable::new();
    let p_row: Vec<BigUint> = (1..=n + 1).map(|k| counts.patterns(n, k)).collect();
    let boolean_model_count = semantics::boolean_models(f, n)?;
    let least_k_not_tautology = chi.iter().zip(&p_row).position(|(c, p)| c < p).map(|i| i + 1);
    Ok(ChiReport {
        formula: f.clone(),
        n,
        classical_tautology: chi[0] == p_row[0],
        classical_contradiction: chi[0] == BigUint::from(0u32),
        godel_infinity_tautology: chi[n] == p_row[n],
        least_k_not_tautology,
        chi,
        p_row,
        boolean_model_count,
    })
}
