//! Which finite-valued Gödel logics a handful of well-known formulas hold in.

use godel_chi::characteristics::{countermodel, is_tautology_ginf, is_tautology_gk};
use godel_chi::Formula;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("X1 -> X1", 1),
        ("(X1 -> X2) | (X2 -> X1)", 2),
        ("X1 | ~X1", 1),
        ("~X1 | ~~X1", 1),
        ("~~X1 -> X1", 1),
        ("X1 | (X1 -> X2)", 2),
        ("X1 | (X1 -> X2) | ((X1 & X2) -> X3)", 3),
    ];
    for (text, n) in cases {
        let f: Formula = text.parse()?;
        let holds: Vec<String> = (1..=n + 1)
            .filter_map(|k| match is_tautology_gk(&f, n, k) {
                Ok(true) => Some(Ok(format!("G_{}", k + 1))),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_, _>>()?;
        print!("{text:<40} holds in: {}", if holds.is_empty() { "-".into() } else { holds.join(" ") });
        if is_tautology_ginf(&f, n)? {
            println!("  (all Gödel logics)");
        } else {
            let witness = countermodel(&f, n, n + 1)?.expect("not a tautology");
            println!("  fails at {witness}, values {:?}", witness.canonical_assignment().values());
        }
    }
    Ok(())
}
