use std::f64::consts::PI;

use sectorial::funcalc::{sectorial_projection, SectorSpec};
use sectorial::opdisc::{assemble, cross_check, mid_band_error, projection_pair};
use sectorial::symbolcalc::ClassicalSymbol;

const TOL: f64 = 1e-10;

fn left() -> SectorSpec {
    SectorSpec::new(PI / 2.0, 1.5 * PI).unwrap()
}

fn dirac() -> ClassicalSymbol {
    ClassicalSymbol::parse("xi, 0.5 + 0.25*cos(x); 0.5 + 0.25*cos(x), -xi").unwrap()
}

#[test]
fn dirac_error_shrinks_with_cutoff_and_order() {
    let p = dirac();
    let coarse = cross_check(&p, left(), 8, 0, TOL).unwrap();
    let fine = cross_check(&p, left(), 32, 2, TOL).unwrap();
    eprintln!("{coarse:?}\n{fine:?}");
    assert!(fine.error < coarse.error);
    let e: Vec<f64> = (0..=2).map(|j| mid_band_error(&p, left(), 16, j, TOL).unwrap()).collect();
    eprintln!("E(16, j) = {e:?}");
    assert!(e[1] <= e[0] && e[2] <= e[1]);
}

#[test]
fn matrix_projection_invariants() {
    let p = dirac();
    let a = assemble(&p, 16).unwrap();
    let pi = sectorial_projection(&a.mat, left(), TOL).unwrap();
    assert!((&pi * &pi).dist_inf(&pi) < 1e-8);
    assert!((&a.mat * &pi).dist_inf(&(&pi * &a.mat)) < 1e-8);
}

#[test]
fn x_independent_case_is_exact_blockwise() {
    let p = ClassicalSymbol::parse("xi, 1; 1, -xi").unwrap();
    let k_max = 16;
    let (pi, op) = projection_pair(&p, left(), k_max, 2, TOL).unwrap();
    let a = assemble(&p, k_max).unwrap();
    let kk = k_max as i64;
    for kr in -kk..=kk {
        for kc in -kk..=kk {
            let b = pi.block(kr, kc);
            if kr == kc {
                let direct = sectorial_projection(&a.block(kc, kc), left(), TOL).unwrap();
                assert!(b.dist_inf(&direct) <= 1e-10, "block {kc}: {}", b.dist_inf(&direct));
            } else {
                assert!(b.max_abs() <= 1e-10);
            }
        }
    }
    // mid-band relative agreement with the J = 2 symbol sum
    for k in (k_max / 4) as i64..=(k_max / 2) as i64 {
        for kc in [k, -k] {
            let exact = pi.block(kc, kc);
            let rel = exact.dist_inf(&op.block(kc, kc)) / exact.norm_inf();
            assert!(rel <= 0.05, "mode {kc}: {rel}");
        }
    }
}
