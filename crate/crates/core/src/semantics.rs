//! Gödel semantics over finite chains of truth levels.
//!
//! A chain `{0, 1, ..., top}` stands for the truth values `{0, 1/top, ..., 1}`.
//! Gödel connectives only look at the order of their arguments, so integer
//! levels give exactly the same answers as the rational values would.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::formula::Formula;

/// Truth levels for `n` variables in the chain `{0, ..., top}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelAssignment {
    top: u32,
    values: Vec<u32>,
}

impl LevelAssignment {
    pub fn new(top: u32, values: Vec<u32>) -> Result<Self> {
        if top == 0 {
            return Err(Error::InvalidAssignment("top level must be at least 1".into()));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, &v)| v > top) {
            return Err(Error::InvalidAssignment(format!("X{} has level {v}, above top {top}", i + 1)));
        }
        Ok(LevelAssignment { top, values })
    }

    pub(crate) fn new_unchecked(top: u32, values: Vec<u32>) -> Self {
        debug_assert!(top >= 1 && values.iter().all(|&v| v <= top));
        LevelAssignment { top, values }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Level of `X{index}` (1-based).
    pub fn value(&self, index: usize) -> u32 {
        self.values[index - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Var(usize),
    Bot,
    Top,
    And,
    Or,
    Implies,
    Neg,
}

/// A formula flattened to postfix form.
///
/// Evaluation runs on an explicit value stack, so it never recurses no matter
/// how deep the syntax tree is. Compile once and evaluate many times when
/// sweeping over large sets of assignments.
#[derive(Debug, Clone)]
pub struct CompiledFormula {
    ops: Vec<Op>,
    max_var: usize,
}

impl CompiledFormula {
    pub fn new(f: &Formula) -> Self {
        // Reverse pre-order with children pushed left-then-right gives the
        // postfix sequence once the output is reversed.
        let mut ops = Vec::new();
        let mut stack = vec![f];
        let mut max_var = 0;
        while let Some(node) = stack.pop() {
            match node {
                Formula::Var(i) => {
                    max_var = max_var.max(i.get());
                    ops.push(Op::Var(i.get() - 1));
                }
                Formula::Bot => ops.push(Op::Bot),
                Formula::Top => ops.push(Op::Top),
                Formula::Neg(c) => {
                    ops.push(Op::Neg);
                    stack.push(c);
                }
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                    ops.push(match node {
                        Formula::And(..) => Op::And,
                        Formula::Or(..) => Op::Or,
                        _ => Op::Implies,
                    });
                    stack.push(l);
                    stack.push(r);
                }
            }
        }
        ops.reverse();
        CompiledFormula { ops, max_var }
    }

    pub fn max_var(&self) -> usize {
        self.max_var
    }

    pub(crate) fn check_arity(&self, n: usize) -> Result<()> {
        if self.max_var > n {
            Err(Error::VariableOutOfRange { index: self.max_var, n })
        } else {
            Ok(())
        }
    }

    pub fn eval(&self, a: &LevelAssignment) -> Result<u32> {
        self.check_arity(a.n())?;
        Ok(self.eval_levels(&a.values, a.top, &mut Vec::new()))
    }

    /// Evaluates with a caller-provided scratch stack. `values` must cover
    /// every variable of the formula.
    pub(crate) fn eval_levels(&self, values: &[u32], top: u32, stack: &mut Vec<u32>) -> u32 {
        stack.clear();
        for op in &self.ops {
            let v = match *op {
                Op::Var(i) => values[i],
                Op::Bot => 0,
                Op::Top => top,
                Op::Neg => {
                    let a = stack.pop().expect("well-formed postfix");
                    if a == 0 {
                        top
                    } else {
                        0
                    }
                }
                Op::And | Op::Or | Op::Implies => {
                    let b = stack.pop().expect("well-formed postfix");
                    let a = stack.pop().expect("well-formed postfix");
                    match op {
                        Op::And => a.min(b),
                        Op::Or => a.max(b),
                        _ => {
                            if a <= b {
                                top
                            } else {
                                b
                            }
                        }
                    }
                }
            };
            stack.push(v);
        }
        stack.pop().expect("well-formed postfix")
    }
}

/// Truth level of `f` under `a`.
pub fn eval(f: &Formula, a: &LevelAssignment) -> Result<u32> {
    CompiledFormula::new(f).eval(a)
}

/// Whether `f` takes the top level under `a`.
pub fn is_true(f: &Formula, a: &LevelAssignment) -> Result<bool> {
    Ok(eval(f, a)? == a.top)
}

/// Largest `n` accepted by [`boolean_models`].
pub const MAX_BOOLEAN_VARS: usize = 32;

/// Number of Boolean assignments to `X1..Xn` that make `f` true.
pub fn boolean_models(f: &Formula, n: usize) -> Result<BigUint> {
    let compiled = CompiledFormula::new(f);
    compiled.check_arity(n)?;
    if n > MAX_BOOLEAN_VARS {
        return Err(Error::ResourceLimit {
            what: "Boolean model count",
            needed: format!("2^{n} assignments"),
            limit: 1u64 << MAX_BOOLEAN_VARS,
        });
    }
    let mut values = vec![0u32; n];
    let mut stack = Vec::new();
    let mut count: u64 = 0;
    for bits in 0u64..(1u64 << n) {
        for (i, v) in values.iter_mut().enumerate() {
            *v = ((bits >> i) & 1) as u32;
        }
        if compiled.eval_levels(&values, 1, &mut stack) == 1 {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}
