//! Logarithms of a Jordan block with two different branch cuts, and the
//! regularized-limit definition checked against the keyhole integral.

use std::f64::consts::PI;

use sectorial::contours::BranchSpec;
use sectorial::funcalc::{branch_logarithm, branch_logarithm_limit, CalcSettings};
use sectorial::io::load_matrix;
use sectorial::numkernel::expm;

pub fn run_example() -> sectorial::Result<()> {
    let a = load_matrix(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/jordan.json"))?;

    // the eigenvalue -1+i has argument 3π/4, so these cuts give arguments
    // differing by 2π
    let up = branch_logarithm(&a, BranchSpec::new(PI), 1e-11)?;
    let down = branch_logarithm(&a, BranchSpec::new(PI / 2.0), 1e-11)?;
    println!("log with cut at pi:{up:?}");
    println!("log with cut at pi/2:{down:?}");
    println!("|exp(log A) - A| = {:.2e}", expm(&up).dist_inf(&a));
    println!("(log_pi - log_pi/2)[0][0] = {:.12}", (&up - &down)[(0, 0)]);

    let limit = branch_logarithm_limit(&a, BranchSpec::new(PI), &CalcSettings::new(1e-11))?;
    println!("|keyhole - extrapolated limit| = {:.2e}", up.dist_inf(&limit.value));
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
