mod common;

use godel_chi::characteristics::{chi, countermodel, equivalent, is_tautology_gk};
use godel_chi::counting::pattern_count;
use godel_chi::oracle::{brute_chi, brute_class_count, brute_equivalence};
use godel_chi::patterns::{enumerate, pattern_of};
use godel_chi::semantics::is_true;
use godel_chi::valuations::{value_at_pattern, Valuation};
use godel_chi::{Formula, LevelAssignment, Permutation};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use common::{formula, truth_table_models};

/// A formula together with a variable count covering it.
fn sized_formula(max_n: usize, depth: u32) -> impl Strategy<Value = (Formula, usize)> {
    (1..=max_n).prop_flat_map(move |n| (formula(n, depth), Just(n)))
}

fn assignment(n: usize, top: u32) -> impl Strategy<Value = LevelAssignment> {
    proptest::collection::vec(0..=top, n).prop_map(move |v| LevelAssignment::new(top, v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn chi_agrees_with_brute_force((f, n) in sized_formula(3, 4), k in 1usize..=4) {
        prop_assert_eq!(chi(&f, n, k).unwrap(), brute_chi(&f, n, k).unwrap());
    }

    #[test]
    fn chi_one_is_truth_table_count((f, n) in sized_formula(5, 5)) {
        prop_assert_eq!(chi(&f, n, 1).unwrap(), BigUint::from(truth_table_models(&f, n)));
    }

    #[test]
    fn chi_satisfies_valuation_law(n in 1usize..=4, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = common::random_formula(&mut rng, n, 4);
        let g = common::random_formula(&mut rng, n, 4);
        for k in 1..=n + 2 {
            let c = |x: &Formula| chi(x, n, k).unwrap();
            prop_assert_eq!(
                c(&Formula::or(f.clone(), g.clone())) + c(&Formula::and(f.clone(), g.clone())),
                c(&f) + c(&g)
            );
        }
    }

    #[test]
    fn chi_is_monotone_bounded_and_clamped((f, n) in sized_formula(4, 4)) {
        let values: Vec<BigUint> = (1..=n + 3).map(|k| chi(&f, n, k).unwrap()).collect();
        for k in 1..=n + 3 {
            prop_assert!(values[k - 1] <= pattern_count(n, k));
            if k > 1 {
                prop_assert!(values[k - 2] <= values[k - 1]);
            }
            if k > n + 1 {
                prop_assert_eq!(&values[k - 1], &values[n]);
            }
        }
    }

    #[test]
    fn chi_is_invariant_under_renaming((f, n) in sized_formula(4, 4), pick in any::<prop::sample::Index>()) {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let sigma = pick.get(&perms);
        let g = f.rename(sigma).unwrap();
        for k in 1..=n + 1 {
            prop_assert_eq!(chi(&f, n, k).unwrap(), chi(&g, n, k).unwrap());
        }
    }

    #[test]
    fn tautology_iff_chi_is_full((f, n) in sized_formula(3, 4), k in 1usize..=4) {
        let full = chi(&f, n, k).unwrap() == pattern_count(n, k);
        prop_assert_eq!(is_tautology_gk(&f, n, k).unwrap(), full);
        match countermodel(&f, n, k).unwrap() {
            Some(p) => {
                prop_assert!(!full);
                prop_assert!(p.height() <= k);
                prop_assert!(!p.satisfies(&f).unwrap());
            }
            None => prop_assert!(full),
        }
    }

    #[test]
    fn satisfaction_is_inherited_by_parents((f, n) in sized_formula(3, 4)) {
        for p in enumerate(n, n + 1) {
            if let Some(q) = p.parent() {
                if p.satisfies(&f).unwrap() {
                    prop_assert!(q.satisfies(&f).unwrap(), "{} holds at {} but not at {}", f, p, q);
                }
            }
        }
    }

    #[test]
    fn pattern_decides_truth(
        (f, a) in (1usize..=4, 1u32..=6)
            .prop_flat_map(|(n, top)| (formula(n, 4), assignment(n, top)))
    ) {
        let p = pattern_of(&a);
        prop_assert_eq!(pattern_of(&p.canonical_assignment()), p.clone());
        prop_assert_eq!(is_true(&f, &a).unwrap(), p.satisfies(&f).unwrap());
    }

    #[test]
    fn brute_equivalence_matches_patterns(
        (a, b) in (1usize..=5, 1u32..=5).prop_flat_map(|(n, top)| (assignment(n, top), assignment(n, top)))
    ) {
        prop_assert_eq!(brute_equivalence(&a, &b).unwrap(), pattern_of(&a) == pattern_of(&b));
        prop_assert!(brute_equivalence(&a, &a).unwrap());
    }

    #[test]
    fn arbitrary_valuations_are_modular(
        n in 1usize..=3,
        f_seed in any::<u64>(),
        weights in proptest::collection::vec(-5i64..=5, 51),
    ) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(f_seed);
        let f = common::random_formula(&mut rng, n, 4);
        let g = common::random_formula(&mut rng, n, 4);
        let mut nu = Valuation::zero(n);
        for (p, w) in enumerate(n, n + 1).zip(&weights) {
            nu.set_weight(&p, BigRational::from_integer((*w).into())).unwrap();
        }
        let v = |x: &Formula| nu.value_at_formula(x).unwrap();
        prop_assert_eq!(
            v(&Formula::or(f.clone(), g.clone())) + v(&Formula::and(f.clone(), g.clone())),
            v(&f) + v(&g)
        );
        prop_assert_eq!(v(&Formula::Bot), BigRational::zero());
    }

    #[test]
    fn chi_combination_values(n in 1usize..=3, coeffs in proptest::collection::vec(-4i64..=4, 1..=4)) {
        let coeffs: Vec<BigRational> =
            coeffs.into_iter().take(n + 1).map(|c| BigRational::from_integer(c.into())).collect();
        let nu = Valuation::chi_combination(n, &coeffs, 1000).unwrap();
        for p in enumerate(n, n + 1) {
            let want: BigRational = coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer((p.height().min(i + 1) as i64).into()))
                .sum();
            prop_assert_eq!(value_at_pattern(&nu, &p), want);
        }
    }

    #[test]
    fn equivalence_matches_brute_force((f, n) in sized_formula(2, 3), g in formula(2, 3)) {
        let n = n.max(g.max_var()).max(1);
        let k = n + 1;
        let same = (0..(k as u64 + 1).pow(n as u32)).all(|mut c| {
            let v = (0..n).map(|_| { let d = (c % (k as u64 + 1)) as u32; c /= k as u64 + 1; d }).collect();
            let a = LevelAssignment::new(k as u32, v).unwrap();
            godel_chi::semantics::eval(&f, &a).unwrap() == godel_chi::semantics::eval(&g, &a).unwrap()
        });
        prop_assert_eq!(equivalent(&f, &g, n).unwrap(), same);
    }

    #[test]
    fn printing_round_trips(f in formula(4, 6)) {
        let text = f.to_string();
        prop_assert_eq!(text.parse::<Formula>().unwrap(), f);
    }
}

#[test]
fn class_counts_match_recursion() {
    for n in 1..=5 {
        for k in 1..=6 {
            assert_eq!(brute_class_count(n, k).unwrap(), pattern_count(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn oracle_class_keys_are_patterns() {
    let f: Formula = "X1 -> X2 | ~X3".parse().unwrap();
    let census = godel_chi::oracle::census(&f, 3, 3).unwrap();
    let mut keys: Vec<_> = census.classes.iter().map(|c| c.to_pattern()).collect();
    keys.sort();
    let listed: Vec<_> = enumerate(3, 4).filter(|p| p.height() <= 3).collect();
    assert_eq!(keys, listed);
    let satisfied = census.satisfied_classes.iter().filter(|c| c.to_pattern().satisfies(&f).unwrap()).count();
    assert_eq!(satisfied, census.satisfied_classes.len());
}
