//! For hermitian matrices the right half-plane projection is the
//! projection onto the positive eigenvectors, zero on the nullspace.

use std::f64::consts::PI;

use sectorial::funcalc::{positive_eigenprojection, sectorial_projection, SectorSpec};
use sectorial::io::load_matrix;
use sectorial::samples::{random_hermitian, rng};

pub fn run_example() -> sectorial::Result<()> {
    let right = SectorSpec::new(-PI / 2.0, PI / 2.0)?;

    let a = load_matrix(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/hermitian3.json"))?;
    let aps = positive_eigenprojection(&a, 1e-12)?;
    let pi = sectorial_projection(&a, right, 1e-11)?;
    println!("shipped matrix: |APS - P| = {:.2e}, rank {:.0}", aps.dist_inf(&pi), pi.trace().re);

    let mut r = rng(7);
    let (b, d) = random_hermitian(&mut r, 5, true)?;
    println!("eigenvalues {d:.3?}");
    let aps = positive_eigenprojection(&b, 1e-12)?;
    let pi = sectorial_projection(&b, right, 1e-11)?;
    println!("singular matrix: |APS - P| = {:.2e}", aps.dist_inf(&pi));
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
