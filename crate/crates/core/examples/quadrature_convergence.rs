//! Projection error as the number of Gauss–Legendre panels per contour
//! segment doubles, for each shipped matrix.

use std::f64::consts::PI;

use sectorial::converge::{converge_study, to_csv};
use sectorial::funcalc::SectorSpec;
use sectorial::io::load_matrix;

pub fn run_example() -> sectorial::Result<()> {
    let s = SectorSpec::new(PI / 2.0, 1.5 * PI)?;
    for name in ["diag_pm1", "jordan", "nonnormal3", "hermitian3"] {
        let path = format!("{}/examples/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let a = load_matrix(&path)?;
        println!("# {name}");
        print!("{}", to_csv(&converge_study(&a, s, &[8, 16, 32, 64])?));
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
