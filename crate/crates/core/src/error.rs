use thiserror::Error;

/// Errors produced by the library.
///
/// Numerical payloads are reported as `f64` regardless of the scalar type the
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (max asymmetry {deviation:.3e})")]
    NonHermitian { deviation: f64 },

    #[error("eigensolver failed to converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("singular input: |R[{index},{index}]| = {magnitude:.3e} below threshold")]
    SingularInput { index: usize, magnitude: f64 },

    #[error("state vector length {len} is not dim^2 = {expected}")]
    BadLength { len: usize, expected: usize },

    #[error("trace {trace:.17e} is not 1 within tolerance")]
    InvalidTrace { trace: f64 },

    #[error("eigenvalue {value:.3e} below the -1e-10 clamping window")]
    NegativeEigenvalue { value: f64 },

    #[error("degenerate draw: trace below threshold after {attempts} attempts")]
    DegenerateDraw { attempts: usize },

    #[error("matrix is not traceless (trace magnitude {trace:.3e})")]
    NotTraceless { trace: f64 },

    #[error("state is singular (eigenvalue {min_eigenvalue:.3e} too small for the BKM kernel)")]
    SingularState { min_eigenvalue: f64 },

    #[error("support violation: rho carries weight {weight:.3e} outside supp(sigma)")]
    SupportViolation { weight: f64 },

    #[error("invalid mixture: rho +/- drho/2 has eigenvalue {min_eigenvalue:.3e}")]
    InvalidMixture { min_eigenvalue: f64 },

    #[error("simplex point invalid: {reason}")]
    InvalidSimplex { reason: String },

    #[error("Muttalib-Borodin parameters out of range: theta={theta}, alpha={alpha}")]
    InvalidMbParams { theta: f64, alpha: f64 },

    #[error("rejection envelope violated: acceptance ratio {ratio:.6} > 1")]
    BoundViolation { ratio: f64 },

    #[error("rejection oracle only supports dimensions 2 and 3, got {dim}")]
    UnsupportedDim { dim: usize },

    #[error("argument must be positive, got {value}")]
    NonPositive { value: f64 },

    #[error("zero variance: cannot standardize a constant sample")]
    ZeroVariance,

    #[error("empty input: {what}")]
    EmptyInput { what: &'static str },

    #[error("invalid argument: {what}")]
    InvalidArgument { what: String },
}

pub type Result<T> = std::result::Result<T, Error>;
