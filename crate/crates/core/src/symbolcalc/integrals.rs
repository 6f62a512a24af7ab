//! Contour integrals of resolvent-symbol terms at a fixed `(x, ξ)`: the
//! logarithm symbol terms `l_{θ,-j}` and the projection symbol terms
//! `π_{θ,φ,-j}` by the two routes.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::symbol::ClassicalSymbol;
use super::words::{PointEvaluator, WordSum};
use crate::contours::{angular_distance, build_keyhole_closed, integrate, BranchSpec, Path, PathPoint, Segment};
use crate::error::{Error, Result};
use crate::funcalc::{CalcSettings, Computed, Placement, SectorSpec};
use crate::numkernel::{eigenvalues, CMatrix};

fn check_xi(xi: f64) -> Result<()> {
    if xi.abs() >= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("symbol terms are evaluated only for |xi| >= 1, got {xi}")))
    }
}

fn terms(p: &ClassicalSymbol, js: std::ops::RangeInclusive<usize>) -> Result<Vec<WordSum>> {
    let all = p.resolvent_terms(*js.end())?;
    Ok(js.map(|j| (*all[j]).clone()).collect())
}

/// A closed keyhole around the spectrum of `p_m(x, ξ)` avoiding the cut,
/// scaled by `scale`.
fn keyhole_around(pm: &CMatrix, b: BranchSpec, scale: f64) -> Result<Path> {
    let place = Placement::of(pm)?;
    place.require_invertible()?;
    place.check_rays(&[b.theta])?;
    build_keyhole_closed(b, place.r0 * scale, place.r_max * scale, place.keyhole_gap(b.theta))
}

fn i_over_2pi(res: crate::contours::QuadResult<CMatrix>) -> Computed {
    Computed {
        value: res.value.scale(C64::new(0.0, 0.5 / PI)),
        est_error: res.est_error / (2.0 * PI),
        nodes_used: res.nodes_used,
    }
}

/// `l_{θ,-j}(x, ξ) = (i/2π) ∮ log_θ λ q_{-m-j}(x, ξ, λ) dλ` over a closed
/// curve around the spectrum of `p_m(x, ξ)`; for `j = 0` the part
/// `m log|ξ|` is removed.
pub fn log_symbol_term(p: &ClassicalSymbol, j: usize, x: f64, xi: f64, b: BranchSpec, tol: f64) -> Result<CMatrix> {
    Ok(log_symbol_term_with(p, j, x, xi, b, &CalcSettings::new(tol))?.value)
}

pub fn log_symbol_term_with(
    p: &ClassicalSymbol,
    j: usize,
    x: f64,
    xi: f64,
    b: BranchSpec,
    cfg: &CalcSettings,
) -> Result<Computed> {
    check_xi(xi)?;
    let q = terms(p, j..=j)?;
    let ev = PointEvaluator::new(&q, p, x, xi);
    let path = keyhole_around(ev.principal(), b, 1.0)?;
    let res = integrate(&path, |pt: &PathPoint| Ok(ev.eval(pt.z)?.scale(b.log_on_path(pt)?)), cfg.tol, cfg.max_panels)?;
    let mut out = i_over_2pi(res);
    if j == 0 {
        let shift = p.order() as f64 * xi.abs().ln();
        out.value = out.value.shifted(C64::new(shift, 0.0));
    }
    Ok(out)
}

/// Small positively oriented circles around the eigenvalue clusters of `pm`
/// inside the sector, each of radius half the distance to the nearest other
/// eigenvalue or ray. `None` if no eigenvalue lies in the sector.
pub fn sector_circles(pm: &CMatrix, s: SectorSpec) -> Result<Option<Path>> {
    let ev: Vec<C64> = eigenvalues(pm)?.into_iter().map(|e| e.value).collect();
    for &z in &ev {
        for ray in s.rays() {
            if angular_distance(z.arg(), ray) < crate::funcalc::RAY_ATOL {
                return Err(Error::RayHitsSpectrum { eigenvalue: z, ray });
            }
        }
    }
    let mut circles = Vec::new();
    for &z in ev.iter().filter(|&&z| s.contains(z)) {
        let mut d = f64::INFINITY;
        for &w in &ev {
            if w != z {
                d = d.min((w - z).norm());
            }
        }
        for ray in s.rays() {
            let ang = angular_distance(z.arg(), ray);
            d = d.min(if ang < PI / 2.0 { z.norm() * ang.sin() } else { z.norm() });
        }
        circles.push(Segment::circle(z, 0.5 * d));
    }
    if circles.is_empty() {
        Ok(None)
    } else {
        Path::circles(circles).map(Some)
    }
}

/// `(i/2π) ∮ Σ_{j ∈ js} q_{-m-j}(x, ξ, λ) dλ` over [`sector_circles`].
pub fn projection_symbol_with(
    p: &ClassicalSymbol,
    js: std::ops::RangeInclusive<usize>,
    x: f64,
    xi: f64,
    s: SectorSpec,
    cfg: &CalcSettings,
) -> Result<Computed> {
    check_xi(xi)?;
    let q = terms(p, js)?;
    let ev = PointEvaluator::new(&q, p, x, xi);
    match sector_circles(ev.principal(), s)? {
        None => Ok(Computed {
            value: CMatrix::zeros(p.dim()),
            est_error: 0.0,
            nodes_used: 0,
        }),
        Some(path) => Ok(i_over_2pi(integrate(&path, |pt: &PathPoint| ev.eval(pt.z), cfg.tol, cfg.max_panels)?)),
    }
}

/// `π_{θ,φ,-j}(x, ξ)` by both routes: `(i/2π)(l_{θ,-j} - l_{φ,-j})` and the
/// residue integral of `q_{-m-j}` around the in-sector spectrum of `p_m`.
pub fn sectorial_symbol_term(
    p: &ClassicalSymbol,
    j: usize,
    x: f64,
    xi: f64,
    s: SectorSpec,
    tol: f64,
) -> Result<(CMatrix, CMatrix)> {
    let (bt, bp) = s.branches();
    let lt = log_symbol_term(p, j, x, xi, bt, tol)?;
    let lp = log_symbol_term(p, j, x, xi, bp, tol)?;
    let route_a = (&lt - &lp).scale(C64::new(0.0, 0.5 / PI));
    let route_b = projection_symbol_with(p, j..=j, x, xi, s, &CalcSettings::new(tol))?.value;
    Ok((route_a, route_b))
}

/// `‖l_{θ,-j}(x, tξ) - t^{-j} l_{θ,-j}(x, ξ)‖∞`.
pub fn homogeneity_defect(p: &ClassicalSymbol, j: usize, x: f64, xi: f64, t: f64, b: BranchSpec, tol: f64) -> Result<f64> {
    if t < 1.0 {
        return Err(Error::InvalidArgument(format!("scaling factor must be >= 1, got {t}")));
    }
    let big = log_symbol_term(p, j, x, t * xi, b, tol)?;
    let small = log_symbol_term(p, j, x, xi, b, tol)?;
    Ok(big.dist_inf(&small.scale_real(t.powi(-(j as i32)))))
}

/// `‖(i/2π) ∮ q_{-m-j}(x, ξ, ϱ) dϱ‖∞` over the curve used at `(x, tξ)`
/// scaled down by `t^{-m}`; vanishes for `j ≥ 1` because the integrand is
/// `O(|ϱ|⁻²)`.
pub fn vanishing_moment(p: &ClassicalSymbol, j: usize, x: f64, xi: f64, t: f64, b: BranchSpec, tol: f64) -> Result<f64> {
    check_xi(xi)?;
    let q = terms(p, j..=j)?;
    let ev = PointEvaluator::new(&q, p, x, xi);
    let scale = t.powi(-(p.order() as i32));
    let path = keyhole_around(&p.principal(x, t * xi), b, scale)?;
    let res = integrate(&path, |pt: &PathPoint| ev.eval(pt.z), tol, crate::contours::DEFAULT_MAX_PANELS)?;
    Ok(i_over_2pi(res).value.norm_inf())
}

/// `m log|ξ| I + Σ_{j ≤ J} l_{θ,-j}(x, ξ)`.
pub fn log_symbol_assembly(p: &ClassicalSymbol, j_max: usize, x: f64, xi: f64, b: BranchSpec, tol: f64) -> Result<CMatrix> {
    check_xi(xi)?;
    let mut total = CMatrix::scalar_n(p.dim(), C64::new(p.order() as f64 * xi.abs().ln(), 0.0));
    for j in 0..=j_max {
        total += &log_symbol_term(p, j, x, xi, b, tol)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-11;

    fn lap() -> ClassicalSymbol {
        ClassicalSymbol::parse("xi^2 + 2 + sin(x)").unwrap()
    }

    fn dirac() -> ClassicalSymbol {
        ClassicalSymbol::parse("xi, 0.5 + 0.25*cos(x); 0.5 + 0.25*cos(x), -xi").unwrap()
    }

    #[test]
    fn log_terms_of_examples() {
        let free = ClassicalSymbol::parse("xi^2").unwrap();
        assert!(log_symbol_term(&free, 0, 0.0, 2.0, BranchSpec::new(PI), TOL).unwrap().max_abs() < 1e-9);
        let l2 = log_symbol_term(&lap(), 2, 0.0, 2.0, BranchSpec::new(PI), TOL).unwrap();
        assert!((l2[(0, 0)] - C64::new(0.5, 0.0)).norm() < 1e-9, "{l2:?}");
        let sigma = ClassicalSymbol::parse("xi, 0; 0, -xi").unwrap();
        let l0 = log_symbol_term(&sigma, 0, 0.0, 1.0, BranchSpec::new(PI / 2.0), TOL).unwrap();
        let want = CMatrix::from_diag(&[C64::new(0.0, 0.0), C64::new(0.0, -PI)]);
        assert!(l0.dist_inf(&want) < 1e-9, "{l0:?}");
    }

    #[test]
    fn assembly() {
        let free = ClassicalSymbol::parse("xi^2").unwrap();
        let a = log_symbol_assembly(&free, 0, 0.0, 2.0, BranchSpec::new(PI), TOL).unwrap();
        assert!((a[(0, 0)] - C64::new(2.0 * 2f64.ln(), 0.0)).norm() < 1e-9);
        let a = log_symbol_assembly(&lap(), 2, 0.0, 4.0, BranchSpec::new(PI), TOL).unwrap();
        assert!((a[(0, 0)] - C64::new(2.0 * 4f64.ln() + 0.125, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn routes_on_examples() {
        let left = SectorSpec::new(PI / 2.0, 1.5 * PI).unwrap();
        for j in 0..=2 {
            let (a, b) = sectorial_symbol_term(&lap(), j, 0.3, 2.0, left, TOL).unwrap();
            assert_eq!(b.max_abs(), 0.0);
            assert!(a.max_abs() < 1e-9);
        }
        let sigma = ClassicalSymbol::parse("xi, 0; 0, -xi").unwrap();
        let (a, b) = sectorial_symbol_term(&sigma, 0, 0.0, 1.0, left, TOL).unwrap();
        let want = CMatrix::from_real_diag(&[0.0, 1.0]);
        assert!(a.dist_inf(&want) < 1e-9 && b.dist_inf(&want) < 1e-9);
        for j in 0..=2 {
            let (a, b) = sectorial_symbol_term(&dirac(), j, 1.1, 2.0, left, TOL).unwrap();
            assert!(a.dist_inf(&b) < 1e-8, "j = {j}: {}", a.dist_inf(&b));
        }
    }

    #[test]
    fn homogeneity_and_moments() {
        let b = BranchSpec::new(PI);
        assert!(homogeneity_defect(&lap(), 2, 0.2, 1.0, 2.0, b, TOL).unwrap() < 1e-8);
        assert!(homogeneity_defect(&lap(), 0, 0.2, 1.0, 2.0, b, TOL).unwrap() < 1e-8);
        assert!(vanishing_moment(&lap(), 2, 0.2, 1.0, 2.0, b, TOL).unwrap() < 1e-8);
    }

    #[test]
    fn branch_shift_constant() {
        let b = BranchSpec::new(PI / 2.0);
        let b2 = BranchSpec::new(PI / 2.0 + 2.0 * PI);
        let d = &log_symbol_term(&dirac(), 0, 0.5, 1.5, b2, TOL).unwrap() - &log_symbol_term(&dirac(), 0, 0.5, 1.5, b, TOL).unwrap();
        assert!(d.dist_inf(&CMatrix::scalar_n(2, C64::new(0.0, 2.0 * PI))) < 1e-8);
    }

    #[test]
    fn small_xi_rejected() {
        assert!(log_symbol_term(&lap(), 0, 0.0, 0.5, BranchSpec::new(PI), TOL).is_err());
    }
}
