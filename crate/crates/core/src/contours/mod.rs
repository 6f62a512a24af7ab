//! Contours of the resolvent calculus, branch-cut scalar functions and
//! quadrature of scalar- or matrix-valued integrands along them.

mod branch;
mod identity;
mod path;
mod quad;
mod tail;

pub use branch::{angular_distance, branch_log, BranchSpec, CUT_RTOL};
pub use identity::{
    contour_identity, extend_for_tail, integrate_tail_corrected, verify_rational_identity, verify_rational_identity_double_pole,
    ContourIdentityReport, DEFAULT_MAX_PANELS,
};
pub use path::{build_keyhole_closed, build_laurent_loop, build_sectorial, Path, PathPoint, Segment};
pub use quad::{integrate, quadrature_sum, QuadResult, QuadValue, NODES_PER_PANEL};
pub use tail::{choose_truncation, estimate_tail};
