//! Sectorial projection of a non-normal matrix, computed by the ray
//! integral, by the difference of two branch logarithms, and by the
//! eigendecomposition oracle.

use std::f64::consts::PI;

use sectorial::funcalc::{projection_via_logs, sectorial_projection, spectral_projection_oracle, SectorSpec};
use sectorial::io::load_matrix;

pub fn run_example() -> sectorial::Result<()> {
    let a = load_matrix(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/nonnormal3.json"))?;
    let s = SectorSpec::new(PI / 2.0, 1.5 * PI)?;

    let pi = sectorial_projection(&a, s, 1e-10)?;
    let via_logs = projection_via_logs(&a, s, 1e-10)?;
    let oracle = spectral_projection_oracle(&a, s)?;

    println!("projection onto the left half-plane spectrum:{pi:?}");
    println!("|P - P^2|         = {:.2e}", (&pi * &pi).dist_inf(&pi));
    println!("|P - logs route|  = {:.2e}", pi.dist_inf(&via_logs));
    println!("|P - oracle|      = {:.2e}", pi.dist_inf(&oracle));
    println!("trace P           = {:.6}", pi.trace().re);
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
