//! Order patterns: equivalence classes of assignments over `n` variables.
//!
//! Two assignments into a finite chain are equivalent when they induce the
//! same equalities and strict inequalities among `0`, the variable values and
//! `1`. Such a class is determined by a partition of the variables into a
//! zero block, an ordered list of `m` nonempty intermediate blocks and a one
//! block. We store it as its *membership vector*: variable `i` lives on level
//! `0` (zero block), `1..=m` (intermediate blocks) or `m + 1` (one block).
//! The membership vector is at the same time the canonical representative of
//! the class, an assignment into the chain `{0, ..., m + 1}`.
//!
//! Each pattern also stands for a join-irreducible element of the Lindenbaum
//! algebra of Gödel logic over `n` variables. Its height is `m + 1`, and its
//! unique lower cover among join-irreducibles is obtained by collapsing the
//! highest intermediate block into the one block ([`OrderPattern::parent`]).
//! The resulting forest has the `2^n` Boolean patterns as its roots.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::semantics::{CompiledFormula, LevelAssignment};

/// An equivalence class of assignments, see the module docs.
///
/// The derived order is the enumeration order: by number of intermediate
/// blocks, then lexicographically by membership vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderPattern {
    inner: u32,
    levels: Vec<u32>,
}

impl OrderPattern {
    /// Builds a pattern from its membership vector and number of
    /// intermediate blocks.
    pub fn from_levels(levels: Vec<u32>, inner: u32) -> Result<Self> {
        let top = inner + 1;
        let mut seen = vec![false; inner as usize + 2];
        for (i, &l) in levels.iter().enumerate() {
            if l > top {
                return Err(Error::InvalidPattern(format!(
                    "X{} on level {l}, above the one block at level {top}",
                    i + 1
                )));
            }
            seen[l as usize] = true;
        }
        if let Some(empty) = (1..=inner as usize).find(|&l| !seen[l]) {
            return Err(Error::InvalidPattern(format!("intermediate block {empty} is empty")));
        }
        Ok(OrderPattern { inner, levels })
    }

    pub(crate) fn from_levels_unchecked(levels: &[u32], inner: u32) -> Self {
        OrderPattern { inner, levels: levels.to_vec() }
    }

    /// Builds a pattern from explicit blocks of 1-based variable indices.
    pub fn from_blocks(n: usize, zero: &[usize], blocks: &[Vec<usize>], one: &[usize]) -> Result<Self> {
        let inner = blocks.len() as u32;
        let mut levels = vec![None; n];
        let groups = std::iter::once((0, zero))
            .chain(blocks.iter().enumerate().map(|(j, b)| (j as u32 + 1, b.as_slice())))
            .chain(std::iter::once((inner + 1, one)));
        for (level, members) in groups {
            for &i in members {
                if i == 0 || i > n {
                    return Err(Error::InvalidPattern(format!("index {i} outside 1..={n}")));
                }
                if levels[i - 1].replace(level).is_some() {
                    return Err(Error::InvalidPattern(format!("X{i} appears in two blocks")));
                }
            }
        }
        let levels = levels
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.ok_or_else(|| Error::InvalidPattern(format!("X{} is in no block", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        OrderPattern::from_levels(levels, inner)
    }

    /// The class of an assignment.
    pub fn of(a: &LevelAssignment) -> Self {
        let top = a.top();
        let mut middle: Vec<u32> = a.values().iter().copied().filter(|&v| v > 0 && v < top).collect();
        middle.sort_unstable();
        middle.dedup();
        let inner = middle.len() as u32;
        let levels = a
            .values()
            .iter()
            .map(|&v| match v {
                0 => 0,
                v if v == top => inner + 1,
                v => middle.binary_search(&v).expect("collected above") as u32 + 1,
            })
            .collect();
        OrderPattern { inner, levels }
    }

    pub fn n(&self) -> usize {
        self.levels.len()
    }

    /// Number of intermediate blocks.
    pub fn inner_blocks(&self) -> usize {
        self.inner as usize
    }

    /// Height of the corresponding join-irreducible: one more than the
    /// number of intermediate blocks.
    pub fn height(&self) -> usize {
        self.inner as usize + 1
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    fn block_at(&self, level: u32) -> Vec<usize> {
        self.levels.iter().enumerate().filter(|&(_, &l)| l == level).map(|(i, _)| i + 1).collect()
    }

    pub fn zero_block(&self) -> Vec<usize> {
        self.block_at(0)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        (1..=self.inner).map(|l| self.block_at(l)).collect()
    }

    pub fn one_block(&self) -> Vec<usize> {
        self.block_at(self.inner + 1)
    }

    /// The representative assignment into `{0, ..., m + 1}`.
    pub fn canonical_assignment(&self) -> LevelAssignment {
        LevelAssignment::new_unchecked(self.inner + 1, self.levels.clone())
    }

    /// Whether every assignment of this class makes `f` true.
    pub fn satisfies(&self, f: &Formula) -> Result<bool> {
        self.satisfies_compiled(&CompiledFormula::new(f))
    }

    pub fn satisfies_compiled(&self, f: &CompiledFormula) -> Result<bool> {
        f.check_arity(self.n())?;
        let top = self.inner + 1;
        Ok(f.eval_levels(&self.levels, top, &mut Vec::new()) == top)
    }

    /// The lower cover in the forest of join-irreducibles: the highest
    /// intermediate block merges into the one block. Roots (Boolean patterns)
    /// have no parent.
    pub fn parent(&self) -> Option<OrderPattern> {
        if self.inner == 0 {
            return None;
        }
        let m = self.inner;
        Some(OrderPattern { inner: m - 1, levels: self.levels.iter().map(|&l| l.min(m)).collect() })
    }

    /// This pattern followed by all of its ancestors down to the root.
    pub fn chain_to_root(&self) -> impl Iterator<Item = OrderPattern> {
        std::iter::successors(Some(self.clone()), |p| p.parent())
    }

    /// Relabels variable `i` as `σ(i)`.
    pub fn apply_perm(&self, sigma: &Permutation) -> Result<OrderPattern> {
        if sigma.len() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), actual: sigma.len() });
        }
        let mut levels = vec![0; self.n()];
        for (i, &l) in self.levels.iter().enumerate() {
            levels[sigma.apply(i + 1) - 1] = l;
        }
        Ok(OrderPattern { inner: self.inner, levels })
    }

    /// A representative of the orbit under all variable permutations.
    ///
    /// Two patterns lie in the same orbit exactly when their block sizes agree
    /// level by level, i.e. when their sorted membership vectors agree.
    pub fn orbit_representative(&self) -> OrderPattern {
        let mut levels = self.levels.clone();
        levels.sort_unstable();
        OrderPattern { inner: self.inner, levels }
    }
}

impl From<&LevelAssignment> for OrderPattern {
    fn from(a: &LevelAssignment) -> Self {
        OrderPattern::of(a)
    }
}

/// Shorthand for [`OrderPattern::of`].
pub fn pattern_of(a: &LevelAssignment) -> OrderPattern {
    OrderPattern::of(a)
}

/// Textual form `zero|block1|...|blockm|one`, each block a braced list of
/// variable indices, e.g. `{}|{1,2}|{3}`.
impl fmt::Display for OrderPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for level in 0..=self.inner + 1 {
            if level > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            for (j, i) in self.block_at(level).into_iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl FromStr for OrderPattern {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form; braces are optional.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('|').collect();
        if parts.len() < 2 {
            return Err(Error::InvalidPattern(format!("{s:?}: expected zero|...|one")));
        }
        let parse_block = |part: &str| -> Result<Vec<usize>> {
            let body = part.trim();
            let body = body.strip_prefix('{').map_or(body, |b| b.strip_suffix('}').unwrap_or(b)).trim();
            if body.is_empty() {
                return Ok(Vec::new());
            }
            body.split(',')
                .map(|t| {
                    t.trim().parse::<usize>().map_err(|_| Error::InvalidPattern(format!("bad index {:?}", t.trim())))
                })
                .collect()
        };
        let blocks = parts.iter().map(|p| parse_block(p)).collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        let (zero, rest) = blocks.split_first().expect("at least two parts");
        let (one, middle) = rest.split_last().expect("at least two parts");
        OrderPattern::from_blocks(n, zero, middle, one)
    }
}

/// A bijection of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// `image[i - 1]` is the image of `i`.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut hit = vec![false; n];
        for &j in &image {
            if j == 0 || j > n || std::mem::replace(&mut hit[j - 1], true) {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection of 1..={n}")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    /// Swaps `i` and `j` in `{1..n}`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidPermutation(format!("cannot swap {i} and {j} in 1..={n}")));
        }
        let mut p = Permutation::identity(n);
        p.image.swap(i - 1, j - 1);
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j - 1] = i + 1;
        }
        Permutation { image }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { expected: self.len(), actual: other.len() });
        }
        Ok(Permutation { image: other.image.iter().map(|&i| self.apply(i)).collect() })
    }

    /// All `n!` permutations in lexicographic order of their image vectors.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
                let pivot = i - 1;
                let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[pivot]).expect("exists");
                succ.swap(pivot, j);
                succ[i..].reverse();
                next = Some(succ);
            }
            Some(Permutation { image: current })
        })
    }
}

/// Walks the membership vectors of all patterns with a given range of
/// intermediate-block counts, in enumeration order, without allocating per
/// pattern. A fixed prefix restricts the walk to one slice of the space.
#[derive(Debug, Clone)]
pub(crate) struct PatternCursor {
    n: usize,
    inner: u32,
    last_inner: u32,
    prefix: Vec<u32>,
    levels: Vec<u32>,
    counts: Vec<usize>,
    missing: usize,
    state: CursorState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CursorState {
    Fresh,
    Active,
    Done,
}

impl PatternCursor {
    /// All patterns with between `first_inner` and `last_inner` intermediate
    /// blocks whose membership vector starts with `prefix`.
    pub(crate) fn new(n: usize, first_inner: u32, last_inner: u32, prefix: Vec<u32>) -> Self {
        debug_assert!(prefix.len() <= n);
        PatternCursor {
            n,
            inner: first_inner,
            last_inner: last_inner.min(n as u32),
            prefix,
            levels: vec![0; n],
            counts: Vec::new(),
            missing: 0,
            state: CursorState::Fresh,
        }
    }

    pub(crate) fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub(crate) fn inner(&self) -> u32 {
        self.inner
    }

    /// Moves to the next pattern; false once exhausted.
    pub(crate) fn advance(&mut self) -> bool {
        match self.state {
            CursorState::Done => return false,
            CursorState::Active => {
                if self.step() {
                    return true;
                }
                self.inner += 1;
            }
            CursorState::Fresh => {}
        }
        while self.inner <= self.last_inner {
            if self.start() {
                self.state = CursorState::Active;
                return true;
            }
            self.inner += 1;
        }
        self.state = CursorState::Done;
        false
    }

    fn is_inner_level(&self, l: u32) -> bool {
        l >= 1 && l <= self.inner
    }

    fn start(&mut self) -> bool {
        let top = self.inner + 1;
        if self.prefix.iter().any(|&l| l > top) {
            return false;
        }
        self.counts = vec![0; top as usize + 1];
        let fixed = self.prefix.len();
        self.levels[..fixed].copy_from_slice(&self.prefix);
        for &l in &self.prefix {
            self.counts[l as usize] += 1;
        }
        self.missing = (1..=self.inner as usize).filter(|&l| self.counts[l] == 0).count();
        if self.missing > self.n - fixed {
            return false;
        }
        self.fill(fixed);
        true
    }

    /// Lexicographically smallest completion of positions `from..n`, which
    /// must not be counted yet: zeros, then the missing levels ascending.
    fn fill(&mut self, from: usize) {
        let zeros = self.n - from - self.missing;
        self.levels[from..from + zeros].fill(0);
        self.counts[0] += zeros;
        let mut pos = from + zeros;
        for l in 1..=self.inner {
            if self.counts[l as usize] == 0 {
                self.levels[pos] = l;
                self.counts[l as usize] = 1;
                pos += 1;
            }
        }
        debug_assert_eq!(pos, self.n);
        self.missing = 0;
    }

    fn step(&mut self) -> bool {
        let top = self.inner + 1;
        for i in (self.prefix.len()..self.n).rev() {
            let cur = self.levels[i];
            self.counts[cur as usize] -= 1;
            if self.is_inner_level(cur) && self.counts[cur as usize] == 0 {
                self.missing += 1;
            }
            let room = self.n - 1 - i;
            for v in cur + 1..=top {
                let gain = usize::from(self.is_inner_level(v) && self.counts[v as usize] == 0);
                if self.missing - gain <= room {
                    self.levels[i] = v;
                    self.counts[v as usize] += 1;
                    self.missing -= gain;
                    self.fill(i + 1);
                    return true;
                }
            }
        }
        false
    }
}

/// Iterator over all patterns on `n` variables of height at most a bound.
#[derive(Debug, Clone)]
pub struct Patterns {
    cursor: PatternCursor,
}

impl Iterator for Patterns {
    type Item = OrderPattern;

    fn next(&mut self) -> Option<OrderPattern> {
        if self.cursor.advance() {
            Some(OrderPattern::from_levels_unchecked(self.cursor.levels(), self.cursor.inner()))
        } else {
            None
        }
    }
}

/// Every pattern on `n` variables with height at most `max_height`, each once,
/// by ascending number of intermediate blocks and then lexicographically by
/// membership vector. Heights above `n + 1` do not occur.
pub fn enumerate(n: usize, max_height: usize) -> Patterns {
    let cursor = if max_height == 0 {
        let mut c = PatternCursor::new(n, 0, 0, Vec::new());
        c.state = CursorState::Done;
        c
    } else {
        PatternCursor::new(n, 0, (max_height - 1).min(n) as u32, Vec::new())
    };
    Patterns { cursor }
}

/// Splits the patterns of height at most `max_height` into disjoint slices
/// keyed by (intermediate block count, level of `X1`). Each slice can be
/// walked independently.
pub(crate) fn work_units(n: usize, max_height: usize) -> Vec<PatternCursor> {
    if max_height == 0 {
        return Vec::new();
    }
    let last = (max_height - 1).min(n) as u32;
    if n == 0 {
        return vec![PatternCursor::new(0, 0, 0, Vec::new())];
    }
    (0..=last).flat_map(|m| (0..=m + 1).map(move |first| PatternCursor::new(n, m, m, vec![first]))).collect()
}

/// Dense numbering of all patterns of height at most `max_height`, in
/// enumeration order.
#[derive(Debug, Clone)]
pub struct PatternIndex {
    n: usize,
    patterns: Vec<OrderPattern>,
    positions: HashMap<OrderPattern, usize>,
}

impl PatternIndex {
    /// Fails with [`Error::ResourceLimit`] if more than `limit` patterns
    /// would be indexed.
    pub fn new(n: usize, max_height: usize, limit: u64) -> Result<Self> {
        let needed = crate::counting::pattern_count(n, max_height.max(1));
        if max_height > 0 && needed > limit.into() {
            return Err(Error::ResourceLimit { what: "pattern index", needed: needed.to_string(), limit });
        }
        let patterns: Vec<_> = enumerate(n, max_height).collect();
        let positions = patterns.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(PatternIndex { n, patterns, positions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn get(&self, ordinal: usize) -> Option<&OrderPattern> {
        self.patterns.get(ordinal)
    }

    pub fn position(&self, p: &OrderPattern) -> Option<usize> {
        self.positions.get(p).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, OrderPattern> {
        self.patterns.iter()
    }
}

/// Graphviz rendering of the indexed forest. Nodes are named by ordinal and
/// edges run from parent to child.
pub fn forest_dot(index: &PatternIndex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph forest_{} {{", index.n());
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (i, p) in index.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{p}\\nh={}\"];", p.height());
    }
    for (i, p) in index.iter().enumerate() {
        if let Some(parent) = p.parent().and_then(|q| index.position(&q)) {
            let _ = writeln!(out, "  n{parent} -> n{i};");
        }
    }
    out.push_str("}\n");
    out
}
