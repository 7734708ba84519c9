//! The vector space of valuations on the Lindenbaum algebra over `n` variables.
//!
//! A valuation on a finite distributive lattice is determined by its values on
//! join-irreducibles (and at bottom, here always 0). Because the
//! join-irreducibles below any join-irreducible form a chain, it is
//! convenient to store a valuation by its *weights*: the increment at each
//! join-irreducible over its lower cover. The value at an element `x` is then
//! the sum of the weights of all join-irreducibles below `x`, which satisfies
//! `ν(x) + ν(y) = ν(x ∨ y) + ν(x ∧ y)` automatically. The indicator weights
//! form the basis `{e_p}` of the space, whose dimension is `P(n, n + 1)`.
//!
//! Join-irreducibles are order patterns (see [`crate::patterns`]); "below the
//! class of `φ`" means "satisfies `φ`".

pub mod linalg;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::characteristics;
use crate::counting;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::patterns::{OrderPattern, PatternIndex};
use crate::semantics::CompiledFormula;

pub use linalg::{determinant, solve, LinearSystem};

/// Default cap on the number of patterns indexed by dense operations; this
/// admits every `n <= 6`.
pub const DEFAULT_DENSE_LIMIT: u64 = 18_731;

/// Anything that assigns a weight to each join-irreducible.
pub trait Weights {
    fn n(&self) -> usize;
    fn weight(&self, p: &OrderPattern) -> BigRational;
}

/// The characteristic `χ_k` on `n` variables: weight 1 on every pattern of
/// height at most `k`, 0 elsewhere. Never materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Characteristic {
    pub n: usize,
    pub k: usize,
}

impl Characteristic {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 || k > n + 1 {
            return Err(Error::InvalidArgument(format!("χ_{k} is not defined for n = {n}; need 1 <= k <= n + 1")));
        }
        Ok(Characteristic { n, k })
    }

    pub fn value_at_formula(&self, f: &Formula) -> Result<BigRational> {
        Ok(BigRational::from_integer(characteristics::chi(f, self.n, self.k)?.into()))
    }
}

impl Weights for Characteristic {
    fn n(&self) -> usize {
        self.n
    }

    fn weight(&self, p: &OrderPattern) -> BigRational {
        if p.height() <= self.k {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    }
}

/// A valuation stored sparsely by its weights on join-irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    n: usize,
    weights: BTreeMap<OrderPattern, BigRational>,
}

impl Valuation {
    /// The zero valuation.
    pub fn zero(n: usize) -> Self {
        Valuation { n, weights: BTreeMap::new() }
    }

    /// The basis valuation `e_p`.
    pub fn indicator(p: &OrderPattern) -> Self {
        let mut v = Valuation::zero(p.n());
        v.weights.insert(p.clone(), BigRational::one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set_weight(&mut self, p: &OrderPattern, w: BigRational) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: p.n() });
        }
        if w.is_zero() {
            self.weights.remove(p);
        } else {
            self.weights.insert(p.clone(), w);
        }
        Ok(())
    }

    /// Patterns with nonzero weight, in enumeration order.
    pub fn support(&self) -> impl Iterator<Item = (&OrderPattern, &BigRational)> {
        self.weights.iter()
    }

    pub fn add(&self, other: &Valuation) -> Result<Valuation> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: other.n });
        }
        let mut out = self.clone();
        for (p, w) in &other.weights {
            let sum = out.weight(p) + w;
            out.set_weight(p, sum)?;
        }
        Ok(out)
    }

    pub fn scale(&self, r: &BigRational) -> Valuation {
        let mut out = Valuation::zero(self.n);
        if !r.is_zero() {
            out.weights = self.weights.iter().map(|(p, w)| (p.clone(), w * r)).collect();
        }
        out
    }

    /// `Σ coeffs[k-1] · χ_k`, materialized over all patterns.
    pub fn chi_combination(n: usize, coeffs: &[BigRational], limit: u64) -> Result<Valuation> {
        if coeffs.len() > n + 1 {
            return Err(Error::InvalidArgument(format!("at most {} coefficients for n = {n}", n + 1)));
        }
        let index = PatternIndex::new(n, n + 1, limit)?;
        let mut v = Valuation::zero(n);
        for p in index.iter() {
            // χ_k contributes to p for every k >= height(p).
            let w: BigRational = coeffs.iter().skip(p.height() - 1).sum();
            v.set_weight(p, w)?;
        }
        Ok(v)
    }

    /// `ν` at the class of `f`: the total weight of patterns satisfying `f`.
    pub fn value_at_formula(&self, f: &Formula) -> Result<BigRational> {
        let compiled = CompiledFormula::new(f);
        compiled.check_arity(self.n)?;
        let mut total = BigRational::zero();
        for (p, w) in &self.weights {
            if p.satisfies_compiled(&compiled)? {
                total += w;
            }
        }
        Ok(total)
    }
}

impl Weights for Valuation {
    fn n(&self) -> usize {
        self.n
    }

    fn weight(&self, p: &OrderPattern) -> BigRational {
        self.weights.get(p).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// `χ_k` as an explicit [`Valuation`].
pub fn chi_as_valuation(n: usize, k: usize, limit: u64) -> Result<Valuation> {
    Characteristic::new(n, k)?;
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[k - 1] = BigRational::one();
    Valuation::chi_combination(n, &coeffs, limit)
}

/// `ν` at the join-irreducible `p`: the sum of weights along the chain from
/// `p` down to its root.
pub fn value_at_pattern<W: Weights + ?Sized>(nu: &W, p: &OrderPattern) -> BigRational {
    p.chain_to_root().map(|q| nu.weight(&q)).sum()
}

/// A longest chain `c_1 < ... < c_{n+1}` of join-irreducibles: the values
/// `0 < X_n < X_{n-1} < ... < X_1 < 1` are pulled out of the one block one
/// at a time.
pub fn maximal_chain(n: usize) -> Result<Vec<OrderPattern>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok((0..=n)
        .map(|m| {
            // c_{m+1}: X_n, ..., X_{n-m+1} on levels 1..=m, the rest on top.
            let levels = (1..=n).map(|i| if i + m > n { (n + 1 - i) as u32 } else { m as u32 + 1 }).collect();
            OrderPattern::from_levels(levels, m as u32).expect("valid by construction")
        })
        .collect())
}

/// Coefficients of the characteristics evaluated along the maximal chain:
/// entry `(i, k)` is `χ_k(c_i)`.
pub fn independence_matrix(n: usize) -> Result<LinearSystem> {
    let chain = maximal_chain(n)?;
    let matrix =
        chain.iter().map(|c| (1..=n + 1).map(|k| value_at_pattern(&Characteristic { n, k }, c)).collect()).collect();
    LinearSystem::homogeneous(matrix)
}

/// Number of orbits of join-irreducibles under permutations of the
/// variables, which is the dimension of the permutation-invariant
/// valuations.
pub fn invariant_dimension(n: usize, limit: u64) -> Result<usize> {
    let index = PatternIndex::new(n, n + 1, limit)?;
    let mut reps: Vec<_> = index.iter().map(OrderPattern::orbit_representative).collect();
    reps.sort_unstable();
    reps.dedup();
    Ok(reps.len())
}

/// Whether `ν` is constant on every orbit of the variable permutations.
pub fn is_invariant(nu: &Valuation, limit: u64) -> Result<bool> {
    let index = PatternIndex::new(nu.n(), nu.n() + 1, limit)?;
    let mut orbit_weight: HashMap<OrderPattern, BigRational> = HashMap::new();
    for p in index.iter() {
        let w = nu.weight(p);
        match orbit_weight.get(&p.orbit_representative()) {
            Some(seen) if *seen != w => return Ok(false),
            Some(_) => {}
            None => {
                orbit_weight.insert(p.orbit_representative(), w);
            }
        }
    }
    Ok(true)
}

/// Coefficients `r` with `ν = Σ r_k χ_k`, if `ν` lies in the span of the
/// characteristics.
pub fn in_span_of_chis(nu: &Valuation, limit: u64) -> Result<Option<Vec<BigRational>>> {
    let n = nu.n();
    let index = PatternIndex::new(n, n + 1, limit)?;
    let chis: Vec<Characteristic> = (1..=n + 1).map(|k| Characteristic { n, k }).collect();
    let mut rows: Vec<(Vec<BigRational>, BigRational)> =
        index.iter().map(|p| (chis.iter().map(|c| c.weight(p)).collect(), nu.weight(p))).collect();
    // Many patterns give identical equations.
    rows.sort();
    rows.dedup();
    let (matrix, rhs) = rows.into_iter().unzip();
    Ok(solve(&LinearSystem::new(matrix, rhs)?))
}

/// Dimensions of the characteristic span, the permutation-invariant
/// valuations and the whole space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dimensions {
    pub n: usize,
    #[serde(serialize_with = "as_decimal")]
    pub v: BigUint,
    pub i_perm: usize,
    pub c: usize,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn dimensions(n: usize, limit: u64) -> Result<Dimensions> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(Dimensions { n, v: counting::join_irreducible_count(n), i_perm: invariant_dimension(n, limit)?, c: n + 1 })
}

/// Renders a rational as `p/q`, or `p` when integral.
pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
