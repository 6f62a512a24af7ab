use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::placement::Placement;
use super::{branch_logarithm_with, CalcSettings, Computed, SectorSpec};
use crate::contours::{build_sectorial, extend_for_tail, integrate, Path, PathPoint};
use crate::error::{Error, Result};
use crate::numkernel::{solve_shifted, CMatrix};

/// `λ ↦ λ⁻¹ (A - λ)⁻¹ A`, the `O(|λ|⁻²)` form of `λ⁻¹ I + (A - λ)⁻¹`.
pub fn sectorial_integrand(a: &CMatrix) -> impl Fn(&PathPoint) -> Result<CMatrix> + '_ {
    move |pt: &PathPoint| Ok(solve_shifted(a, pt.z, a)?.scale(pt.z.inv()))
}

/// The truncated sectorial contour for `a`, with its rays already extended
/// far enough that the tail of [`sectorial_integrand`] is below `tol / 10`.
/// Returns the path and the remaining tail bound.
pub fn sectorial_contour(a: &CMatrix, s: SectorSpec, tol: f64) -> Result<(Path, f64)> {
    let place = Placement::of(a)?;
    place.check_rays(&s.rays())?;
    let path = build_sectorial(s.theta, s.phi, place.r0, place.r_max)?;
    extend_for_tail(&path, &sectorial_integrand(a), 0.1 * tol)
}

/// `Π_{θ,φ}(A) = (i/2π) ∫_Γ λ⁻¹ A (A - λ)⁻¹ dλ`.
pub fn sectorial_projection(a: &CMatrix, s: SectorSpec, tol: f64) -> Result<CMatrix> {
    Ok(sectorial_projection_with(a, s, &CalcSettings::new(tol))?.value)
}

pub fn sectorial_projection_with(a: &CMatrix, s: SectorSpec, cfg: &CalcSettings) -> Result<Computed> {
    let (path, tail) = sectorial_contour(a, s, cfg.tol)?;
    let res = integrate(&path, sectorial_integrand(a), cfg.tol, cfg.max_panels)?;
    let c = C64::new(0.0, 0.5 / PI);
    let pi = res.value.scale(c);
    if cfg.self_check {
        let scale = pi.norm_inf().max(1.0);
        let idem = (&pi * &pi).dist_inf(&pi);
        let bound = 10.0 * cfg.tol * scale * scale;
        if idem > bound {
            return Err(Error::PostconditionFailed { check: "idempotency", value: idem, bound });
        }
        let comm = (a * &pi).dist_inf(&(&pi * a));
        let bound = 10.0 * cfg.tol * scale * a.norm_inf().max(1.0);
        if comm > bound {
            return Err(Error::PostconditionFailed { check: "commutation", value: comm, bound });
        }
    }
    Ok(Computed {
        value: pi,
        est_error: (res.est_error + tail) / (2.0 * PI),
        nodes_used: res.nodes_used,
    })
}

/// `(i/2π)(log_θ A - log_φ A)`.
pub fn projection_via_logs(a: &CMatrix, s: SectorSpec, tol: f64) -> Result<CMatrix> {
    Ok(projection_via_logs_with(a, s, &CalcSettings::new(tol))?.value)
}

pub fn projection_via_logs_with(a: &CMatrix, s: SectorSpec, cfg: &CalcSettings) -> Result<Computed> {
    let (bt, bp) = s.branches();
    let lt = branch_logarithm_with(a, bt, cfg)?;
    let lp = branch_logarithm_with(a, bp, cfg)?;
    Ok(Computed {
        value: (&lt.value - &lp.value).scale(C64::new(0.0, 0.5 / PI)),
        est_error: (lt.est_error + lp.est_error) / (2.0 * PI),
        nodes_used: lt.nodes_used + lp.nodes_used,
    })
}
