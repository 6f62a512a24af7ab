//! Homogeneous terms of the log symbol: the closed form `v(x)/ξ²` for
//! `ξ² + v(x)`, homogeneity in ξ and the full expansion at a point.

use std::f64::consts::PI;

use sectorial::contours::BranchSpec;
use sectorial::symbolcalc::{homogeneity_defect, log_symbol_assembly, log_symbol_term, ClassicalSymbol};

pub fn run_example() -> sectorial::Result<()> {
    let p = ClassicalSymbol::parse("xi^2 + 2 + sin(x)")?;
    let b = BranchSpec::new(PI);
    for x in [0.0, 1.0, 2.0] {
        let l = log_symbol_term(&p, 2, x, 3.0, b, 1e-11)?;
        println!("l_-2({x}, 3) = {:.12}  v/xi^2 = {:.12}", l[(0, 0)].re, (2.0 + x.sin()) / 9.0);
    }
    for j in 0..=3 {
        println!("homogeneity defect j={j}: {:.2e}", homogeneity_defect(&p, j, 0.7, 1.5, 2.0, b, 1e-11)?);
    }
    let total = log_symbol_assembly(&p, 2, 0.0, 4.0, b, 1e-11)?;
    println!("log symbol at (0, 4) through j=2: {:.12}  (2 ln 4 + 1/8 = {:.12})", total[(0, 0)].re, 2.0 * 4f64.ln() + 0.125);
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
