//! The valuation space at small `n`: dimensions, the unimodular independence
//! matrix, and span membership.

use godel_chi::valuations::{
    chi_as_valuation, determinant, dimensions, in_span_of_chis, independence_matrix, is_invariant, rational_string,
    Valuation, DEFAULT_DENSE_LIMIT,
};
use godel_chi::OrderPattern;
use num_rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        let d = dimensions(n, DEFAULT_DENSE_LIMIT)?;
        println!("n={n}: span of chis {}, invariant {}, all {}", d.c, d.i_perm, d.v);
    }

    let m = independence_matrix(4)?;
    for row in m.matrix() {
        let cells: Vec<String> = row.iter().map(rational_string).collect();
        println!("  {}", cells.join(" "));
    }
    println!("det = {}", rational_string(&determinant(&m)?));

    let all_zero: OrderPattern = "{1,2}|{}".parse()?;
    let e = Valuation::indicator(&all_zero);
    println!("\nindicator of {all_zero}");
    println!("  invariant: {}", is_invariant(&e, DEFAULT_DENSE_LIMIT)?);
    println!("  in span:   {}", in_span_of_chis(&e, DEFAULT_DENSE_LIMIT)?.is_some());

    let half = BigRational::new(1.into(), 2.into());
    let mix =
        chi_as_valuation(2, 1, DEFAULT_DENSE_LIMIT)?.add(&chi_as_valuation(2, 3, DEFAULT_DENSE_LIMIT)?.scale(&half))?;
    let coeffs = in_span_of_chis(&mix, DEFAULT_DENSE_LIMIT)?.expect("a combination of chis");
    let shown: Vec<String> = coeffs.iter().map(rational_string).collect();
    println!("\nchi_1 + chi_3 / 2 recovered as [{}]", shown.join(", "));
    Ok(())
}
