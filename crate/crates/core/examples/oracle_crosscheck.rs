//! Compare the pattern-based count with exhaustive enumeration of assignments
//! on random formulas.
//!
//!     cargo run --release --example oracle_crosscheck -- 1000

use godel_chi::characteristics::chi;
use godel_chi::counting::pattern_count;
use godel_chi::oracle::{brute_chi, brute_class_count};
use godel_chi::Formula;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_formula(rng: &mut ChaCha8Rng, n: usize, depth: usize) -> Formula {
    if depth <= 1 || rng.gen_ratio(1, 4) {
        return match rng.gen_range(0..n + 2) {
            0 => Formula::Bot,
            1 => Formula::Top,
            _ => Formula::var(rng.gen_range(1..=n)),
        };
    }
    let a = random_formula(rng, n, depth - 1);
    match rng.gen_range(0..4) {
        0 => Formula::not(a),
        1 => Formula::and(a, random_formula(rng, n, depth - 1)),
        2 => Formula::or(a, random_formula(rng, n, depth - 1)),
        _ => Formula::implies(a, random_formula(rng, n, depth - 1)),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count: usize = std::env::args().nth(1).map_or(Ok(500), |v| v.parse())?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let mut mismatches = 0;
    for i in 0..count {
        let n = 1 + i % 3;
        let f = random_formula(&mut rng, n, 4);
        for k in 1..=4 {
            let (fast, slow) = (chi(&f, n, k)?, brute_chi(&f, n, k)?);
            if fast != slow {
                mismatches += 1;
                println!("mismatch: {f} n={n} k={k}: {fast} vs {slow}");
            }
        }
    }
    println!("{count} formulas, {mismatches} mismatches");

    for n in 1..=4 {
        let row: Vec<String> = (1..=5)
            .map(|k| Ok::<_, godel_chi::Error>(format!("{}/{}", brute_class_count(n, k)?, pattern_count(n, k))))
            .collect::<Result<_, _>>()?;
        println!("classes n={n}: {}", row.join(" "));
    }
    Ok(())
}
