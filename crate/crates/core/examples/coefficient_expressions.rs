//! Parsing symbol coefficients, their ξ-polynomial structure and symbolic
//! derivatives.

use sectorial::expr::{parse_coeff, Var};

pub fn run_example() -> sectorial::Result<()> {
    for src in ["xi^2 + 2 + sin(x)", "xi*(1+cos(x))^2", "-(xi - 1)*sin(2*x)"] {
        let e = parse_coeff(src)?;
        println!("{src}: degree {} in xi, band {:?}", e.xi_degree()?, e.x_band());
        println!("  d/dx  = {}", e.diff(Var::X));
        println!("  d/dxi = {}", e.diff(Var::Xi));
    }
    match parse_coeff("xi^0.5") {
        Err(e) => println!("xi^0.5 rejected: {e}"),
        Ok(_) => println!("xi^0.5 unexpectedly accepted"),
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
