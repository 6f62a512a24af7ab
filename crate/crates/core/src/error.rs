use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical kernels, contour quadrature and the
/// symbol engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shift {lambda} is numerically an eigenvalue (pivot below threshold)")]
    SingularShift { lambda: Complex64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not square or has non-finite entries: {0}")]
    InvalidMatrix(String),

    #[error("eigen oracle supports n <= {max}, got n = {n}")]
    OracleTooLarge { n: usize, max: usize },

    #[error("root clusters {a} and {b} are too close to separate")]
    ClusterAmbiguity { a: Complex64, b: Complex64 },

    #[error("polynomial root iteration did not converge")]
    RootsDidNotConverge,

    #[error("point {lambda} lies on the branch cut at angle {theta}")]
    OnCut { lambda: Complex64, theta: f64 },

    #[error("quadrature did not converge: estimated error {est_error:e}")]
    NoConvergence { est_error: f64 },

    #[error("integrand singular at {lambda}")]
    IntegrandSingular { lambda: Complex64 },

    #[error("integrand decays slower than the tail bound allows")]
    DecayViolation,

    #[error("eigenvalue {eigenvalue} lies on or too close to the ray at angle {ray}")]
    RayHitsSpectrum { eigenvalue: Complex64, ray: f64 },

    #[error("matrix is singular (0 is an eigenvalue)")]
    SingularMatrix,

    #[error("matrix is not hermitian (defect {0:e})")]
    NotHermitian(f64),

    #[error("recursion depth {requested} exceeds the supported maximum {max}")]
    DepthExceeded { requested: usize, max: usize },

    #[error("coefficient function is not band-limited within {band} Fourier modes")]
    BandLimitExceeded { band: usize },

    #[error("parse error at position {position}: expected one of {expected:?}")]
    Parse {
        position: usize,
        expected: Vec<&'static str>,
    },

    #[error("xi enters non-polynomially: {0}")]
    Degree(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("self-check `{check}` failed: {value:e} > {bound:e}")]
    PostconditionFailed {
        check: &'static str,
        value: f64,
        bound: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
