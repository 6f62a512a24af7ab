use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::contours::BranchSpec;
use crate::error::{Error, Result};

/// The open sector `θ < arg λ < φ` bounded by two rays, `θ < φ < θ + 2π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorSpec {
    pub theta: f64,
    pub phi: f64,
}

impl SectorSpec {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if theta.is_finite() && phi.is_finite() && theta < phi && phi < theta + 2.0 * PI {
            Ok(Self { theta, phi })
        } else {
            Err(Error::InvalidArgument(format!(
                "sector needs θ < φ < θ + 2π, got θ = {theta}, φ = {phi}"
            )))
        }
    }

    /// The sector on the other side of the two rays, `(φ, θ + 2π)`.
    pub fn complement(&self) -> Self {
        Self {
            theta: self.phi,
            phi: self.theta + 2.0 * PI,
        }
    }

    pub fn rays(&self) -> [f64; 2] {
        [self.theta, self.phi]
    }

    pub fn branches(&self) -> (BranchSpec, BranchSpec) {
        (BranchSpec::new(self.theta), BranchSpec::new(self.phi))
    }

    /// Whether `z` lies strictly inside the sector. Arguments are measured
    /// from the lower edge; 0 lies in no open sector.
    pub fn contains(&self, z: C64) -> bool {
        if z.norm() == 0.0 {
            return false;
        }
        let rel = (z.arg() - self.theta).rem_euclid(2.0 * PI);
        rel > 0.0 && rel < self.phi - self.theta
    }
}
