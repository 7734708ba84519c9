//! Helpers shared by the integration tests.
#![allow(dead_code)]

use godel_chi::Formula;
use proptest::prelude::*;
use rand::Rng;

/// A random formula over `X1..=Xn` whose syntax tree has depth at most `depth`.
pub fn random_formula<R: Rng>(rng: &mut R, n: usize, depth: usize) -> Formula {
    if depth <= 1 || rng.gen_ratio(1, 4) {
        return match rng.gen_range(0..n + 2) {
            0 if rng.gen_ratio(1, 2) => Formula::Bot,
            0 => Formula::Top,
            _ => Formula::var(rng.gen_range(1..=n)),
        };
    }
    let sub = |rng: &mut R| random_formula(rng, n, depth - 1);
    match rng.gen_range(0..4) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        _ => Formula::implies(sub(rng), sub(rng)),
    }
}

/// Proptest strategy for formulas over `X1..=Xn` with bounded depth.
pub fn formula(n: usize, depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::Bot),
        1 => Just(Formula::Top),
        6 => (1..=n).prop_map(Formula::var),
    ];
    leaf.prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

/// Two-valued evaluation, written directly against the truth tables.
pub fn classical(f: &Formula, bits: &[bool]) -> bool {
    match f {
        Formula::Var(i) => bits[i.get() - 1],
        Formula::Bot => false,
        Formula::Top => true,
        Formula::Neg(a) => !classical(a, bits),
        Formula::And(a, b) => classical(a, bits) && classical(b, bits),
        Formula::Or(a, b) => classical(a, bits) || classical(b, bits),
        Formula::Implies(a, b) => !classical(a, bits) || classical(b, bits),
    }
}

/// Number of satisfying rows of the truth table over `n` variables.
pub fn truth_table_models(f: &Formula, n: usize) -> u64 {
    (0u64..1 << n)
        .filter(|row| {
            let bits: Vec<bool> = (0..n).map(|i| row >> i & 1 == 1).collect();
            classical(f, &bits)
        })
        .count() as u64
}

/// Published reference values of `P(n, k)` for `n = 1..=9`, `k = 1..=7`.
pub const PUBLISHED_TABLE: [[u64; 7]; 9] = [
    [2, 3, 3, 3, 3, 3, 3],
    [4, 9, 11, 11, 11, 11, 11],
    [8, 27, 45, 51, 51, 51, 51],
    [16, 81, 191, 275, 299, 299, 299],
    [32, 243, 813, 1563, 2043, 2163, 2163],
    [64, 729, 3431, 8891, 14771, 18011, 18731],
    [128, 2187, 14325, 49731, 106851, 158931, 184131],
    [256, 6561, 59231, 272675, 757019, 1407179, 1921259],
    [512, 19683, 242973, 1468203, 5228043, 12200883, 20214483],
];
