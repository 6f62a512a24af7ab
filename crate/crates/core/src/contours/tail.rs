//! Bounds for the part of a ray integral beyond the truncation radius.

use num_complex::Complex64 as C64;

use super::path::PathPoint;
use super::quad::QuadValue;
use crate::error::{Error, Result};

/// Bound on `Σ_rays ∫_R^∞ ‖f(r e^{iα})‖ dr` for integrands decaying at least
/// like `|λ|^{-2}`: `Σ C_ray / R` with `C_ray` the largest of `|λ|² ‖f(λ)‖∞`
/// sampled at `R, 2R, 4R`.
///
/// Fails with `DecayViolation` when `‖f(4R)‖ >= ‖f(R)‖ / 2`.
pub fn estimate_tail<V, F>(f: &F, r_max: f64, rays: &[f64]) -> Result<f64>
where
    V: QuadValue,
    F: Fn(&PathPoint) -> Result<V>,
{
    let mut bound = 0.0;
    for &angle in rays {
        let mut norms = [0.0; 3];
        let mut c_ray: f64 = 0.0;
        for (k, r) in [r_max, 2.0 * r_max, 4.0 * r_max].into_iter().enumerate() {
            let pt = PathPoint {
                z: C64::from_polar(r, angle),
                arg: angle,
            };
            norms[k] = f(&pt)?.norm_inf();
            c_ray = c_ray.max(r * r * norms[k]);
        }
        if norms[0] > 0.0 && norms[2] >= 0.5 * norms[0] {
            return Err(Error::DecayViolation);
        }
        if !c_ray.is_finite() {
            return Err(Error::DecayViolation);
        }
        bound += c_ray / r_max;
    }
    Ok(bound)
}

/// Smallest `R = r_start * 10^k` whose tail bound is below `tail_tol`.
/// Returns `(R, bound)`.
pub fn choose_truncation<V, F>(f: &F, rays: &[f64], r_start: f64, tail_tol: f64) -> Result<(f64, f64)>
where
    V: QuadValue,
    F: Fn(&PathPoint) -> Result<V>,
{
    let mut r = r_start;
    let mut bound = f64::INFINITY;
    for _ in 0..60 {
        bound = estimate_tail(f, r, rays)?;
        if bound <= tail_tol {
            return Ok((r, bound));
        }
        r *= 10.0;
        if r > 1e100 {
            break;
        }
    }
    Err(Error::NoConvergence { est_error: bound })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_decay_bound() {
        let f = |pt: &PathPoint| Ok((pt.z + 1.0).powi(-2));
        let bound = estimate_tail(&f, 100.0, &[0.0]).unwrap();
        let exact = 1.0 / 101.0;
        assert!(bound >= exact && bound <= 2.0 * exact, "bound {bound}");
        assert!(bound <= 2.0 / 99.0);
    }

    #[test]
    fn cubic_decay_bound_dominates() {
        let f = |pt: &PathPoint| Ok(pt.z.powi(-3));
        let bound = estimate_tail(&f, 10.0, &[0.0]).unwrap();
        assert!(bound >= 0.005);
    }

    #[test]
    fn slow_decay_rejected() {
        let f = |pt: &PathPoint| Ok(pt.z.powf(-0.5));
        assert_eq!(estimate_tail(&f, 10.0, &[0.3]), Err(Error::DecayViolation));
    }

    #[test]
    fn truncation_radius_meets_tolerance() {
        let f = |pt: &PathPoint| Ok((pt.z - 2.0).powi(-2));
        let (r, bound) = choose_truncation(&f, &[1.0, 2.0], 10.0, 1e-8).unwrap();
        assert!(bound <= 1e-8);
        assert!(r >= 1e8);
    }
}
