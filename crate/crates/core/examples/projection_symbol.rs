//! Projection symbol terms of a Dirac-type system by the two routes: the
//! difference of log terms and the residue around the in-sector spectrum.

use std::f64::consts::PI;

use sectorial::funcalc::SectorSpec;
use sectorial::symbolcalc::{sectorial_symbol_term, ClassicalSymbol};

pub fn run_example() -> sectorial::Result<()> {
    let p = ClassicalSymbol::parse("xi, 0.5 + 0.25*cos(x); 0.5 + 0.25*cos(x), -xi")?;
    let s = SectorSpec::new(PI / 2.0, 1.5 * PI)?;
    for j in 0..=2 {
        let (logs, residue) = sectorial_symbol_term(&p, j, 0.4, 2.0, s, 1e-11)?;
        println!("j={j}:{residue:?}");
        println!("  route difference {:.2e}", logs.dist_inf(&residue));
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
