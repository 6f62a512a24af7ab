//! Contour placement: inner and outer radii and keyhole gap derived from the
//! spectrum (eigen oracle when available, norm bounds otherwise).

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::contours::angular_distance;
use crate::error::{Error, Result};
use crate::numkernel::{characteristic_polynomial, durand_kerner, eigenvalues, inverse, CMatrix, CLUSTER_RTOL, ORACLE_MAX_N};

/// Minimal angular distance between an eigenvalue and a declared ray.
pub const RAY_ATOL: f64 = 1e-6;

const MAX_GAP: f64 = PI / 16.0;

fn raw_roots(a: &CMatrix) -> Result<Vec<C64>> {
    let scale = a.norm_inf();
    let c = characteristic_polynomial(&a.scale_real(1.0 / scale));
    Ok(durand_kerner(&c)?.into_iter().map(|z| z * scale).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    /// Nonzero eigenvalues if the oracle was available.
    pub nonzero: Option<Vec<C64>>,
    pub singular: bool,
    /// Radius below which 0 is the only possible eigenvalue.
    pub r0: f64,
    /// Radius beyond every eigenvalue (before tail extension).
    pub r_max: f64,
}

impl Placement {
    pub fn of(a: &CMatrix) -> Result<Self> {
        let scale = a.norm_inf();
        if a.n() <= ORACLE_MAX_N {
            // clustering only matters for the oracle; near-degenerate
            // spectra fall back to the raw roots
            let ev: Vec<C64> = match eigenvalues(a) {
                Ok(ev) => ev.into_iter().map(|e| e.value).collect(),
                Err(Error::ClusterAmbiguity { .. }) => raw_roots(a)?,
                Err(e) => return Err(e),
            };
            let zero_tol = CLUSTER_RTOL * scale;
            let nonzero: Vec<C64> = ev.iter().copied().filter(|z| z.norm() > zero_tol).collect();
            let singular = nonzero.len() < ev.len();
            let (r0, rho) = if nonzero.is_empty() {
                (1.0, 1.0)
            } else {
                let lo = nonzero.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
                let hi = nonzero.iter().map(|z| z.norm()).fold(0.0, f64::max);
                (0.5 * lo, hi)
            };
            Ok(Self {
                nonzero: Some(nonzero),
                singular,
                r0,
                r_max: 10.0 * rho.max(r0),
            })
        } else {
            // ‖A⁻¹‖ bounds 1/min|μ| from above, ‖A‖ bounds max|μ|.
            let inv = inverse(a).map_err(|_| Error::SingularMatrix)?;
            let r0 = 0.5 / inv.norm_inf();
            Ok(Self {
                nonzero: None,
                singular: false,
                r0,
                r_max: 10.0 * scale.max(r0),
            })
        }
    }

    pub fn require_invertible(&self) -> Result<()> {
        if self.singular {
            Err(Error::SingularMatrix)
        } else {
            Ok(())
        }
    }

    /// Errors if a nonzero eigenvalue sits within `RAY_ATOL` of a ray.
    pub fn check_rays(&self, rays: &[f64]) -> Result<()> {
        if let Some(ev) = &self.nonzero {
            for &ray in rays {
                for &z in ev {
                    if angular_distance(z.arg(), ray) < RAY_ATOL {
                        return Err(Error::RayHitsSpectrum { eigenvalue: z, ray });
                    }
                }
            }
        }
        Ok(())
    }

    /// Keyhole half-gap: `min(π/16, half the angular distance from the cut
    /// to the nearest eigenvalue)`.
    pub fn keyhole_gap(&self, theta: f64) -> f64 {
        let nearest = self
            .nonzero
            .as_ref()
            .map(|ev| ev.iter().map(|z| angular_distance(z.arg(), theta)).fold(PI, f64::min))
            .unwrap_or(PI);
        MAX_GAP.min(0.5 * nearest)
    }
}
