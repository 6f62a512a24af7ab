use rand::Rng;
use sectorial::expr::{parse_coeff, Var};
use sectorial::samples::rng;

const EXPRESSIONS: &[&str] = &[
    "xi^2 + 2 + sin(x)",
    "xi*(1+cos(x))^2",
    "-(xi - 1)*sin(2*x)",
    "0.5 + 0.25*cos(x)",
    "xi^3*cos(x)^2 - 3*xi*sin(x) + 1",
    "(xi + sin(x))^4",
];

#[test]
fn symbolic_derivatives_match_centered_differences() {
    let mut r = rng(11);
    for src in EXPRESSIONS {
        let e = parse_coeff(src).unwrap();
        let dx = e.diff(Var::X);
        let dxi = e.diff(Var::Xi);
        for _ in 0..20 {
            let x = r.random_range(0.0..std::f64::consts::TAU);
            let xi = r.random_range(-2.0..2.0);
            for h in [1e-5, 1e-6] {
                let fx = (e.eval(x + h, xi) - e.eval(x - h, xi)) / (2.0 * h);
                let fxi = (e.eval(x, xi + h) - e.eval(x, xi - h)) / (2.0 * h);
                assert!((fx - dx.eval(x, xi)).abs() <= 1e-6 * (1.0 + fx.abs()), "{src} d/dx at ({x}, {xi}), h={h}");
                assert!((fxi - dxi.eval(x, xi)).abs() <= 1e-6 * (1.0 + fxi.abs()), "{src} d/dxi at ({x}, {xi}), h={h}");
            }
        }
    }
}

#[test]
fn display_reparses_to_the_same_function() {
    let mut r = rng(12);
    for src in EXPRESSIONS {
        let e = parse_coeff(src).unwrap();
        for d in [e.clone(), e.diff(Var::X), e.diff_n(Var::Xi, 2)] {
            let back = parse_coeff(&d.to_string()).unwrap();
            for _ in 0..5 {
                let (x, xi) = (r.random_range(-3.0..3.0), r.random_range(-3.0..3.0));
                assert!((back.eval(x, xi) - d.eval(x, xi)).abs() <= 1e-12 * (1.0 + d.eval(x, xi).abs()), "{d}");
            }
        }
    }
}

#[test]
fn grammar_examples() {
    assert_eq!(parse_coeff("xi^2 + 2 + sin(x)").unwrap().xi_degree().unwrap(), 2);
    assert_eq!(parse_coeff("xi*(1+cos(x))^2").unwrap().xi_degree().unwrap(), 1);
    assert!(parse_coeff("xi^0.5").is_err());
    assert!(parse_coeff("").is_err());
    assert!(parse_coeff("sin x").is_err());
}
