use num_complex::Complex64;
use thiserror::Error;

/// Errors across the polynomial, rational-map, sampling, and adjoint layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("polynomial has degree zero or is identically zero; no roots to find")]
    DegreeZero,

    #[error("root iteration failed to converge within {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("rational map is 0/0 at z = {at}; value is indeterminate")]
    Indeterminate { at: Complex64 },

    #[error("denominator polynomial is identically zero")]
    ZeroDenominator,

    #[error("map is not linear fractional (degree above 1, or constant)")]
    NotLfm,

    #[error("linear fractional map is degenerate (determinant ~ 0)")]
    Degenerate,

    #[error("map is not a self-map of the unit disk (max boundary modulus {max_modulus})")]
    NotSelfMap { max_modulus: f64 },

    #[error("adjoint evaluation at z = 0 is not supported; use coefficient extraction")]
    OriginNotSupported,

    #[error("z = {at} is too close to a branch point; branch weights degenerate")]
    BranchPointProximity { at: Complex64 },

    #[error("z = {at} is too close to the correction-term pole at 1/conj(phi(inf))")]
    CorrectionPole { at: Complex64 },

    #[error("test function has a pole at {pole} inside the closed unit disk")]
    PoleInDisk { pole: Complex64 },

    #[error("an escaped branch met a test function unbounded at infinity; resample elsewhere")]
    EscapedBranch,

    #[error("sample point z = {at} hit a pole of the integrand")]
    PoleCollision { at: Complex64 },

    #[error("sampling radius must lie in (0, 1]")]
    RadiusInvalid,

    #[error("all {attempts} jittered sampling radii failed")]
    JitterExhausted { attempts: usize },

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("{message}")]
    Usage { message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to: 2 for invalid maps or
    /// expressions, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::Usage { .. }
            | Error::ZeroDenominator
            | Error::NotLfm
            | Error::Degenerate
            | Error::NotSelfMap { .. } => 2,
            _ => 3,
        }
    }
}
