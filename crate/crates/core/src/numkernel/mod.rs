//! Dense complex linear algebra: shifted solves for resolvent evaluation and
//! an independent eigenstructure oracle used for verification.

mod eig;
mod expm;
mod lu;
mod matrix;

pub use eig::{
    characteristic_polynomial, durand_kerner, eig_oracle, eigenvalues, EigenData, Eigenvalue,
    CLUSTER_RTOL, ORACLE_MAX_N,
};
pub use expm::expm;
pub use lu::{inverse, resolvent, solve_shifted, Lu, PIVOT_RTOL};
pub use matrix::{CMatrix, C64};
