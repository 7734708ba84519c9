//! The vector of generalised characteristics `χ_1, ..., χ_{n+1}` of a formula.
//!
//!     cargo run --example euler_characteristic -- "~~X1" 1

use godel_chi::characteristics::{chi, chi_vector};
use godel_chi::Formula;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let f: Formula = args.next().unwrap_or_else(|| "~~X1".into()).parse()?;
    let n = match args.next() {
        Some(v) => v.parse()?,
        None => f.max_var().max(1),
    };

    let report = chi_vector(&f, n)?;
    println!("{f} over {n} variable(s)");
    for (k, (c, p)) in report.chi.iter().zip(&report.p_row).enumerate() {
        println!("  chi_{} = {c:>6}   of {p}", k + 1);
    }
    println!("Boolean models: {}", report.boolean_model_count);
    println!("verdict:        {}", report.verdict());

    // Past k = n + 1 the value no longer changes.
    println!("chi_{} = {}", n + 5, chi(&f, n, n + 5)?);
    Ok(())
}
