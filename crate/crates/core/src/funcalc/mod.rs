//! Matrix-level functional calculus along the resolvent contours: sectorial
//! projections, branch-cut logarithms and powers, and the eigen-oracle
//! counterparts used to check them.

mod logpow;
mod oracle;
mod placement;
mod project;
mod sector;

pub use logpow::{
    branch_logarithm, branch_logarithm_limit, branch_logarithm_with, branch_power,
    branch_power_with, limit_mode_term, LIMIT_MODE_STEPS,
};
pub use oracle::{positive_eigenprojection, spectral_projection_oracle};
pub use placement::{Placement, RAY_ATOL};
pub use project::{
    projection_via_logs, projection_via_logs_with, sectorial_contour, sectorial_integrand,
    sectorial_projection, sectorial_projection_with,
};
pub use sector::SectorSpec;

use crate::contours::DEFAULT_MAX_PANELS;
use crate::numkernel::CMatrix;

/// Quadrature settings shared by the contour-based matrix functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalcSettings {
    pub tol: f64,
    pub max_panels: usize,
    /// Run the cheap postcondition checks (idempotency, `exp(log A) = A`).
    pub self_check: bool,
}

impl CalcSettings {
    pub fn new(tol: f64) -> Self {
        Self {
            tol,
            max_panels: DEFAULT_MAX_PANELS,
            self_check: true,
        }
    }

    pub fn max_panels(mut self, max_panels: usize) -> Self {
        self.max_panels = max_panels;
        self
    }

    pub fn self_check(mut self, on: bool) -> Self {
        self.self_check = on;
        self
    }
}

/// A contour-integral result with its quadrature bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct Computed {
    pub value: CMatrix,
    pub est_error: f64,
    pub nodes_used: usize,
}
