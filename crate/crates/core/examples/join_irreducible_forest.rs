//! Walk the forest of order patterns and write it out as Graphviz.
//!
//!     cargo run --example join_irreducible_forest -- 2 > forest.dot

use godel_chi::patterns::{enumerate, forest_dot, PatternIndex};
use godel_chi::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(2), |v| v.parse())?;

    for p in enumerate(n, n + 1) {
        let chain: Vec<String> = p.chain_to_root().map(|q| q.to_string()).collect();
        eprintln!("h={} {:<24} chain: {}", p.height(), p.to_string(), chain.join(" > "));
    }

    let roots = enumerate(n, 1).count();
    if n >= 2 {
        let swap = Permutation::transposition(n, 1, 2)?;
        let p = enumerate(n, n + 1).last().expect("nonempty");
        eprintln!("\n{p} under (1 2) is {}", p.apply_perm(&swap)?);
    }
    eprintln!("{roots} trees");

    let index = PatternIndex::new(n, n + 1, 100_000)?;
    print!("{}", forest_dot(&index));
    Ok(())
}
