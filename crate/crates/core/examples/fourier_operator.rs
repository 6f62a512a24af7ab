//! Fourier truncation of a periodic Dirac-type operator: the projection of
//! the truncated matrix against the operator of the truncated symbol
//! expansion, as the cutoff and the number of terms grow.

use std::f64::consts::PI;

use sectorial::funcalc::SectorSpec;
use sectorial::opdisc::{assemble, mid_band_error};
use sectorial::symbolcalc::ClassicalSymbol;

pub fn run_example() -> sectorial::Result<()> {
    let p = ClassicalSymbol::parse("xi, 0.5 + 0.25*cos(x); 0.5 + 0.25*cos(x), -xi")?;
    let s = SectorSpec::new(PI / 2.0, 1.5 * PI)?;

    let op = assemble(&p, 8)?;
    println!("K=8 truncation: {}x{} matrix", op.mat.n(), op.mat.n());

    for (k, j) in [(8, 0), (16, 0), (16, 1), (16, 2)] {
        println!("E(K={k:>2}, J={j}) = {:.4e}", mid_band_error(&p, s, k, j, 1e-10)?);
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
