//! Complex powers along two cuts and the identity
//! `A_θ^s - A_φ^s = (1 - e^{2πis}) Π_{θ,φ}(A) A_θ^s`.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use sectorial::funcalc::{branch_power, sectorial_projection, SectorSpec};
use sectorial::io::load_matrix;

pub fn run_example() -> sectorial::Result<()> {
    let a = load_matrix(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/nonnormal3.json"))?;
    let s = SectorSpec::new(PI / 2.0, 1.5 * PI)?;
    let (bt, bp) = s.branches();
    let pi = sectorial_projection(&a, s, 1e-11)?;

    for e in [C64::new(0.5, 0.0), C64::new(0.3, 0.2), C64::new(1.7, 0.0)] {
        let pt = branch_power(&a, e, bt, 1e-11)?;
        let pp = branch_power(&a, e, bp, 1e-11)?;
        let factor = C64::new(1.0, 0.0) - (C64::new(0.0, 2.0 * PI) * e).exp();
        let residual = (&pt - &pp).dist_inf(&(&pi * &pt).scale(factor));
        println!("s = {e:<10} residual {residual:.2e}");
    }

    let half = branch_power(&a, C64::new(0.5, 0.0), bt, 1e-11)?;
    println!("|(A^1/2)^2 - A| = {:.2e}", (&half * &half).dist_inf(&a));
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
