//! The ray-integral identity on `f(λ) = 1/((λ - a)(λ - b))` with `a` inside
//! the sector and `b` outside, against the closed form `4π²/(a - b)`.

use num_complex::Complex64 as C64;
use sectorial::contours::verify_rational_identity;

pub fn run_example() -> sectorial::Result<()> {
    let cases = [
        (C64::new(-1.0, 0.5), C64::new(1.0, 0.0), 1.5, 4.5),
        (C64::new(0.0, 2.0), C64::new(0.5, -0.5), 0.8, 2.6),
        (C64::from_polar(0.7, 5.0), C64::from_polar(1.8, 2.0), 4.0, 6.0),
    ];
    for (a, b, theta, phi) in cases {
        let r = verify_rational_identity(a, b, theta, phi, 1e-11)?;
        println!(
            "a={a:.3} b={b:.3} sector=({theta}, {phi}): lhs-rhs {:.2e}, vs closed form {:.2e}, {} nodes",
            r.defect(),
            r.closed_form_defect(),
            r.nodes_used
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
