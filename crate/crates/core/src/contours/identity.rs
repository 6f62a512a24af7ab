//! Tail-corrected integration over open contours and the contour identity
//! relating the two branch-cut logarithm integrals to the sectorial integral.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::branch::{angular_distance, BranchSpec};
use super::path::{build_laurent_loop, build_sectorial, Path, PathPoint, Segment};
use super::quad::{integrate, QuadResult, QuadValue};
use super::tail::choose_truncation;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_PANELS: usize = 1 << 12;

/// Extends the boundary rays of an open path (first segment a ray coming in
/// from radius `R`, last a ray going out to `R`) to a radius where the tail
/// bound of `f` is below `tail_tol`. Returns the extended path and the bound.
pub fn extend_for_tail<V, F>(path: &Path, f: &F, tail_tol: f64) -> Result<(Path, f64)>
where
    V: QuadValue,
    F: Fn(&PathPoint) -> Result<V>,
{
    let segs = path.segments();
    let (first, last) = match (segs.first(), segs.last()) {
        (
            Some(&Segment::Ray { angle: a_in, r_from: r_in, r_to: r_in_end }),
            Some(&Segment::Ray { angle: a_out, r_from: r_out_start, r_to: r_out }),
        ) if !path.is_closed() && segs.len() >= 2 => {
            ((a_in, r_in, r_in_end), (a_out, r_out_start, r_out))
        }
        _ => {
            return Err(Error::InvalidPath(
                "tail correction needs an open path that starts and ends with rays".into(),
            ))
        }
    };
    let r_start = first.1.max(last.2);
    let (r_ext, tail) = choose_truncation(f, &[first.0, last.0], r_start, tail_tol)?;
    let mut new_segs = segs.to_vec();
    new_segs[0] = Segment::ray(first.0, r_ext, first.2);
    let n = new_segs.len();
    new_segs[n - 1] = Segment::ray(last.0, last.1, r_ext);
    Ok((Path::new(new_segs, false)?, tail))
}

/// Integrates along an open path after [`extend_for_tail`] with tail
/// tolerance `tol / 10`; the remaining tail bound is added to `est_error`.
pub fn integrate_tail_corrected<V, F>(
    path: &Path,
    f: F,
    tol: f64,
    max_panels: usize,
) -> Result<QuadResult<V>>
where
    V: QuadValue,
    F: Fn(&PathPoint) -> Result<V>,
{
    let (extended, tail) = extend_for_tail(path, &f, 0.1 * tol)?;
    let mut res = integrate(&extended, f, tol, max_panels)?;
    res.est_error += tail;
    Ok(res)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContourIdentityReport {
    /// `∫_{C_θ} log_θ λ f dλ - ∫_{C_φ} log_φ λ f dλ`
    pub lhs: C64,
    /// `-2πi ∫_{Γ_{θ,φ}} f dλ`
    pub rhs: C64,
    pub closed_form: C64,
    pub est_error: f64,
    pub nodes_used: usize,
}

impl ContourIdentityReport {
    pub fn defect(&self) -> f64 {
        (self.lhs - self.rhs).norm()
    }

    pub fn closed_form_defect(&self) -> f64 {
        (self.lhs - self.closed_form).norm().max((self.rhs - self.closed_form).norm())
    }
}

/// Evaluates both sides of the identity between the Laurent-loop logarithm
/// integrals and the sectorial integral for a scalar integrand `f` that is
/// analytic away from finitely many points in `r0 < |λ|` off the two rays and
/// decays like `|λ|^{-2}`.
pub fn contour_identity<F>(f: F, theta: f64, phi: f64, r0: f64, tol: f64) -> Result<(C64, C64, f64, usize)>
where
    F: Fn(C64) -> C64,
{
    let r_max = 10.0 * r0.max(1.0);
    let bt = BranchSpec::new(theta);
    let bp = BranchSpec::new(phi);
    let loop_t = build_laurent_loop(bt, r0, r_max)?;
    let loop_p = build_laurent_loop(bp, r0, r_max)?;
    let sect = build_sectorial(theta, phi, r0, r_max)?;

    let it = integrate_tail_corrected(&loop_t, |pt: &PathPoint| Ok(bt.log_on_path(pt)? * f(pt.z)), tol, DEFAULT_MAX_PANELS)?;
    let ip = integrate_tail_corrected(&loop_p, |pt: &PathPoint| Ok(bp.log_on_path(pt)? * f(pt.z)), tol, DEFAULT_MAX_PANELS)?;
    let is = integrate_tail_corrected(&sect, |pt: &PathPoint| Ok(f(pt.z)), tol, DEFAULT_MAX_PANELS)?;

    let two_pi_i = C64::new(0.0, 2.0 * PI);
    let lhs = it.value - ip.value;
    let rhs = -two_pi_i * is.value;
    let est = it.est_error + ip.est_error + 2.0 * PI * is.est_error;
    Ok((lhs, rhs, est, it.nodes_used + ip.nodes_used + is.nodes_used))
}

fn check_sector_point(z: C64, lo: f64, hi: f64, what: &str) -> Result<()> {
    let a = z.arg();
    let rel = (a - lo).rem_euclid(2.0 * PI);
    let width = hi - lo;
    if z.norm() > 0.0 && rel > 0.0 && rel < width && angular_distance(a, lo) > 1e-9 && angular_distance(a, hi) > 1e-9 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{what} = {z} is not inside the open sector ({lo}, {hi})")))
    }
}

fn check_sector(theta: f64, phi: f64) -> Result<()> {
    if theta < phi && phi < theta + 2.0 * PI {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("need θ < φ < θ + 2π, got {theta}, {phi}")))
    }
}

/// Checks the identity for `f(λ) = (λ - a)^{-1} (λ - b)^{-1}` with `a` in the
/// sector `(θ, φ)` and `b` in `(φ, θ + 2π)`; the closed form of both sides is
/// `4π² / (a - b)`.
pub fn verify_rational_identity(a: C64, b_pt: C64, theta: f64, phi: f64, tol: f64) -> Result<ContourIdentityReport> {
    check_sector(theta, phi)?;
    check_sector_point(a, theta, phi, "a")?;
    check_sector_point(b_pt, phi, theta + 2.0 * PI, "b")?;
    let r0 = 0.5 * a.norm().min(b_pt.norm());
    let (lhs, rhs, est_error, nodes_used) =
        contour_identity(|z| ((z - a) * (z - b_pt)).inv(), theta, phi, r0, tol)?;
    Ok(ContourIdentityReport {
        lhs,
        rhs,
        closed_form: C64::new(4.0 * PI * PI, 0.0) / (a - b_pt),
        est_error,
        nodes_used,
    })
}

/// Variant with the double pole `f(λ) = (λ - a)^{-2}`, `a` in the sector;
/// both sides vanish.
pub fn verify_rational_identity_double_pole(a: C64, theta: f64, phi: f64, tol: f64) -> Result<ContourIdentityReport> {
    check_sector(theta, phi)?;
    check_sector_point(a, theta, phi, "a")?;
    let (lhs, rhs, est_error, nodes_used) =
        contour_identity(|z| (z - a).powi(-2), theta, phi, 0.5 * a.norm(), tol)?;
    Ok(ContourIdentityReport {
        lhs,
        rhs,
        closed_form: C64::new(0.0, 0.0),
        est_error,
        nodes_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contours::path::build_laurent_loop;

    #[test]
    fn laurent_loop_log_against_residue() {
        // residue calculus: 2πi · (d/dλ log λ)|_{λ=-1} = -2πi
        let b = BranchSpec::new(0.0);
        let path = build_laurent_loop(b, 0.5, 1e3).unwrap();
        let r = integrate_tail_corrected(
            &path,
            |pt: &PathPoint| Ok(b.log_on_path(pt)? * (pt.z + 1.0).powi(-2)),
            1e-10,
            DEFAULT_MAX_PANELS,
        )
        .unwrap();
        assert!((r.value - C64::new(0.0, -2.0 * PI)).norm() < 1e-6, "{}", r.value);
    }

    #[test]
    fn half_plane_sector() {
        let i = C64::new(0.0, 1.0);
        let r = verify_rational_identity(i, -i, 0.0, PI, 1e-10).unwrap();
        let expect = C64::new(0.0, -2.0 * PI * PI);
        assert!((r.closed_form - expect).norm() < 1e-14);
        assert!(r.defect() < 1e-6);
        assert!(r.closed_form_defect() < 1e-6, "{r:?}");
    }

    #[test]
    fn quarter_sector() {
        let a = C64::from_polar(1.0, PI / 2.0);
        let b = C64::from_polar(1.0, 1.5 * PI);
        let r = verify_rational_identity(a, b, PI / 4.0, 0.75 * PI, 1e-10).unwrap();
        assert!(r.closed_form_defect() < 1e-6, "{r:?}");
    }

    #[test]
    fn double_pole_vanishes() {
        let a = C64::from_polar(1.5, 1.0);
        let r = verify_rational_identity_double_pole(a, 0.3, 2.0, 1e-10).unwrap();
        assert!(r.lhs.norm() < 1e-6 && r.rhs.norm() < 1e-6, "{r:?}");
    }

    #[test]
    fn misplaced_points_rejected() {
        let i = C64::new(0.0, 1.0);
        assert!(verify_rational_identity(-i, i, 0.0, PI, 1e-8).is_err());
        assert!(verify_rational_identity(i, -i, PI, 0.0, 1e-8).is_err());
    }
}
