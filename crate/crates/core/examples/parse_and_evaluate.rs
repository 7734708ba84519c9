//! Parse a formula, print it back, and evaluate it on a few chains.
//!
//!     cargo run --example parse_and_evaluate -- "(X1 -> X2) | ~X1"

use godel_chi::semantics::eval;
use godel_chi::{Formula, LevelAssignment};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(X1 -> X2) | ~X1".into());
    let f: Formula = text.parse()?;
    println!("parsed:   {f}");
    println!("depth:    {}", f.depth());
    println!("max var:  X{}", f.max_var());

    let n = f.max_var().max(1);
    for top in [1u32, 2, 3] {
        println!("\nchain 0..={top}");
        let rows = (top as u64 + 1).pow(n as u32);
        for code in 0..rows {
            let mut c = code;
            let values: Vec<u32> = (0..n)
                .map(|_| {
                    let d = (c % (top as u64 + 1)) as u32;
                    c /= top as u64 + 1;
                    d
                })
                .collect();
            let a = LevelAssignment::new(top, values.clone())?;
            println!("  {values:?} -> {}", eval(&f, &a)?);
        }
    }
    Ok(())
}
