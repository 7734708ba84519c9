//! Counts of join-irreducibles by height: `P(n, k)` and the per-tree `T(n, k)`.
//!
//!     cargo run --example counting_table -- 12 8

use godel_chi::counting::{join_irreducible_count, CountTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let max_n: usize = args.next().map_or(Ok(9), |v| v.parse())?;
    let max_k: usize = args.next().map_or(Ok(7), |v| v.parse())?;

    let mut counts = CountTable::new();
    println!("P(n, k)");
    for (n, row) in counts.pattern_table(max_n, max_k).iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>12}")).collect();
        println!("{:>3} {}", n + 1, cells.join(""));
    }
    println!("\nT(n, k)");
    for (n, row) in counts.tree_table(max_n, max_k).iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>12}")).collect();
        println!("{:>3} {}", n + 1, cells.join(""));
    }
    println!("\nall join-irreducibles for n = 30: {}", join_irreducible_count(30));
    Ok(())
}
