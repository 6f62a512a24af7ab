use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::placement::Placement;
use super::{CalcSettings, Computed};
use crate::contours::{build_keyhole_closed, build_laurent_loop, integrate, integrate_tail_corrected, BranchSpec, PathPoint};
use crate::error::{Error, Result};
use crate::numkernel::{expm, resolvent, solve_shifted, CMatrix};

/// Exponents `s` of the `λ^{-s}` regularization, halved twice, used by
/// [`branch_logarithm_limit`].
pub const LIMIT_MODE_STEPS: [f64; 3] = [0.1, 0.05, 0.025];

fn keyhole_integral(
    a: &CMatrix,
    b: BranchSpec,
    cfg: &CalcSettings,
    g: impl Fn(&PathPoint) -> Result<C64>,
) -> Result<Computed> {
    let place = Placement::of(a)?;
    place.require_invertible()?;
    place.check_rays(&[b.theta])?;
    let path = build_keyhole_closed(b, place.r0, place.r_max, place.keyhole_gap(b.theta))?;
    let res = integrate(&path, |pt: &PathPoint| Ok(resolvent(a, pt.z)?.scale(g(pt)?)), cfg.tol, cfg.max_panels)?;
    Ok(Computed {
        value: res.value.scale(C64::new(0.0, 0.5 / PI)),
        est_error: res.est_error / (2.0 * PI),
        nodes_used: res.nodes_used,
    })
}

/// `log_θ A = (i/2π) ∮ log_θ λ (A - λ)⁻¹ dλ` over a closed keyhole around
/// the spectrum that avoids the cut.
pub fn branch_logarithm(a: &CMatrix, b: BranchSpec, tol: f64) -> Result<CMatrix> {
    Ok(branch_logarithm_with(a, b, &CalcSettings::new(tol))?.value)
}

pub fn branch_logarithm_with(a: &CMatrix, b: BranchSpec, cfg: &CalcSettings) -> Result<Computed> {
    let out = keyhole_integral(a, b, cfg, |pt| b.log_on_path(pt))?;
    if cfg.self_check {
        let defect = expm(&out.value).dist_inf(a);
        let bound = 50.0 * cfg.tol * a.norm_inf().max(1.0);
        if defect > bound {
            return Err(Error::PostconditionFailed { check: "exp(log A) = A", value: defect, bound });
        }
    }
    Ok(out)
}

/// `A_θ^s = (i/2π) ∮ λ_θ^s (A - λ)⁻¹ dλ`.
pub fn branch_power(a: &CMatrix, s: C64, b: BranchSpec, tol: f64) -> Result<CMatrix> {
    Ok(branch_power_with(a, s, b, &CalcSettings::new(tol))?.value)
}

pub fn branch_power_with(a: &CMatrix, s: C64, b: BranchSpec, cfg: &CalcSettings) -> Result<Computed> {
    keyhole_integral(a, b, cfg, |pt| b.pow_on_path(pt, s))
}

/// `(i/2π) ∫_{𝒞_θ} λ_θ^{-s} log_θ λ (A - λ)⁻¹ dλ = A_θ^{-s} log_θ A` on the
/// Laurent loop, for `s > 0`. The integrand is used in the form
/// `λ^{-s-1} log_θ λ (A - λ)⁻¹ A`; the dropped `-λ^{-s-1} log_θ λ` term
/// integrates to zero over the untruncated loop.
pub fn limit_mode_term(a: &CMatrix, b: BranchSpec, s: f64, cfg: &CalcSettings) -> Result<Computed> {
    if !(s > 0.0) {
        return Err(Error::InvalidArgument(format!("limit-mode exponent must be positive, got {s}")));
    }
    let place = Placement::of(a)?;
    place.require_invertible()?;
    place.check_rays(&[b.theta])?;
    let path = build_laurent_loop(b, place.r0, place.r_max)?;
    let f = |pt: &PathPoint| {
        let w = b.pow_on_path(pt, C64::new(-s - 1.0, 0.0))? * b.log_on_path(pt)?;
        Ok(solve_shifted(a, pt.z, a)?.scale(w))
    };
    let res = integrate_tail_corrected(&path, f, cfg.tol, cfg.max_panels)?;
    Ok(Computed {
        value: res.value.scale(C64::new(0.0, 0.5 / PI)),
        est_error: res.est_error / (2.0 * PI),
        nodes_used: res.nodes_used,
    })
}

/// `log_θ A` as the `s → 0` limit of [`limit_mode_term`], Richardson
/// extrapolated from the three [`LIMIT_MODE_STEPS`] (removes the `s` and
/// `s²` terms).
pub fn branch_logarithm_limit(a: &CMatrix, b: BranchSpec, cfg: &CalcSettings) -> Result<Computed> {
    let [h, h2, h4] = LIMIT_MODE_STEPS;
    let f1 = limit_mode_term(a, b, h, cfg)?;
    let f2 = limit_mode_term(a, b, h2, cfg)?;
    let f4 = limit_mode_term(a, b, h4, cfg)?;
    let mut v = f4.value.scale_real(8.0);
    v.axpy(C64::new(-6.0, 0.0), &f2.value);
    v.axpy(C64::new(1.0, 0.0), &f1.value);
    Ok(Computed {
        value: v.scale_real(1.0 / 3.0),
        est_error: (8.0 * f4.est_error + 6.0 * f2.est_error + f1.est_error) / 3.0,
        nodes_used: f1.nodes_used + f2.nodes_used + f4.nodes_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::CMatrix;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn diagonal_logs() {
        let a = CMatrix::from_real_diag(&[std::f64::consts::E, 1.0]);
        let l = branch_logarithm(&a, BranchSpec::new(PI), 1e-10).unwrap();
        assert!(l.dist_inf(&CMatrix::from_real_diag(&[1.0, 0.0])) < 1e-9, "{l:?}");
        let l = branch_logarithm(&CMatrix::from_real_diag(&[-1.0]), BranchSpec::new(PI / 2.0), 1e-10).unwrap();
        assert!((l[(0, 0)] - c(0.0, -PI)).norm() < 1e-9);
    }

    #[test]
    fn jordan_block_log() {
        // log(λ₀ + N) = log λ₀ + N/λ₀ for a 2×2 Jordan block
        let i = c(0.0, 1.0);
        let a = CMatrix::from_rows(vec![vec![i, c(1.0, 0.0)], vec![c(0.0, 0.0), i]]).unwrap();
        let l = branch_logarithm(&a, BranchSpec::new(1.5 * PI), 1e-10).unwrap();
        let want = CMatrix::from_rows(vec![vec![c(0.0, PI / 2.0), -i], vec![c(0.0, 0.0), c(0.0, PI / 2.0)]]).unwrap();
        assert!(l.dist_inf(&want) < 1e-9, "{l:?}");
    }

    #[test]
    fn singular_rejected() {
        let a = CMatrix::from_real_diag(&[0.0, 1.0]);
        assert_eq!(branch_logarithm(&a, BranchSpec::new(PI), 1e-8), Err(Error::SingularMatrix));
        assert_eq!(branch_power(&a, c(0.5, 0.0), BranchSpec::new(PI), 1e-8), Err(Error::SingularMatrix));
    }

    #[test]
    fn powers() {
        let r = branch_power(&CMatrix::from_real_diag(&[4.0]), c(0.5, 0.0), BranchSpec::new(PI), 1e-10).unwrap();
        assert!((r[(0, 0)] - c(2.0, 0.0)).norm() < 1e-9);
        let a = CMatrix::from_real_diag(&[1.0, -1.0]);
        let b = BranchSpec::new(PI / 2.0);
        let root = branch_power(&a, c(0.5, 0.0), b, 1e-10).unwrap();
        assert!((&root * &root).dist_inf(&a) < 1e-9);
        let id = branch_power(&a, c(0.0, 0.0), b, 1e-10).unwrap();
        assert!(id.dist_inf(&CMatrix::identity(2)) < 1e-9);
        let one = branch_power(&a, c(1.0, 0.0), b, 1e-10).unwrap();
        assert!(one.dist_inf(&a) < 1e-9);
    }

    #[test]
    fn limit_mode_matches_keyhole() {
        let a = CMatrix::from_rows(vec![
            vec![c(1.2, 0.1), c(0.2, 0.0)],
            vec![c(-0.1, 0.05), c(0.9, -0.2)],
        ])
        .unwrap();
        let b = BranchSpec::new(PI);
        let cfg = CalcSettings::new(1e-10);
        let key = branch_logarithm_with(&a, b, &cfg).unwrap().value;
        let lim = branch_logarithm_limit(&a, b, &cfg).unwrap().value;
        assert!(key.dist_inf(&lim) < 1e-5, "{}", key.dist_inf(&lim));
    }
}
