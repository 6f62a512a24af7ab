use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::path::PathPoint;
use crate::error::{Error, Result};

const TAU: f64 = 2.0 * PI;

/// Relative distance to the cut ray below which a point counts as on the cut.
pub const CUT_RTOL: f64 = 1e-12;

/// A branch cut along the ray `e^{iθ} R₊`: arguments live in `(θ - 2π, θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchSpec {
    pub theta: f64,
}

impl BranchSpec {
    pub fn new(theta: f64) -> Self {
        Self { theta }
    }

    /// Angle between `arg z` and the cut ray, in `[0, π]`.
    pub fn angular_distance(&self, z: C64) -> f64 {
        angular_distance(z.arg(), self.theta)
    }

    /// `arg_θ(z) ∈ (θ - 2π, θ)`.
    pub fn arg(&self, z: C64) -> Result<f64> {
        let r = z.norm();
        let on_cut = if r == 0.0 {
            true
        } else {
            let d = self.angular_distance(z);
            let rel = if d <= PI / 2.0 { d.sin() } else { 1.0 };
            rel < CUT_RTOL
        };
        if on_cut || !r.is_finite() {
            return Err(Error::OnCut {
                lambda: z,
                theta: self.theta,
            });
        }
        let a = z.arg();
        let k = ((a - self.theta) / TAU).ceil();
        Ok(a - TAU * k)
    }

    /// `log_θ z = ln|z| + i arg_θ(z)`.
    pub fn log(&self, z: C64) -> Result<C64> {
        Ok(C64::new(z.norm().ln(), self.arg(z)?))
    }

    /// `z_θ^s = exp(s log_θ z)`.
    pub fn pow(&self, z: C64, s: C64) -> Result<C64> {
        Ok((s * self.log(z)?).exp())
    }

    /// `log_θ` at a path point. Points on either edge of the cut (as on the
    /// rays of a Laurent loop) take the boundary value given by the path's
    /// continuous argument.
    pub fn log_on_path(&self, pt: &PathPoint) -> Result<C64> {
        let lo = self.theta - TAU;
        let slack = 1e-12 * self.theta.abs().max(1.0);
        if pt.arg >= lo - slack && pt.arg <= self.theta + slack && pt.z.norm() > 0.0 {
            Ok(C64::new(pt.z.norm().ln(), pt.arg.clamp(lo, self.theta)))
        } else {
            self.log(pt.z)
        }
    }

    /// `z_θ^s` at a path point, using the same edge convention as
    /// [`BranchSpec::log_on_path`].
    pub fn pow_on_path(&self, pt: &PathPoint, s: C64) -> Result<C64> {
        Ok((s * self.log_on_path(pt)?).exp())
    }
}

/// Smallest angle between directions `a` and `b`, in `[0, π]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

pub fn branch_log(lambda: C64, b: BranchSpec) -> Result<C64> {
    b.log(lambda)
}
