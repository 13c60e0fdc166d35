use thiserror::Error;

/// Errors raised by the elimination routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElimError {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    NvarsMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },

    #[error("degree too small: {0}")]
    DegreeTooSmall(String),

    #[error("points are projectively equal")]
    EqualPoints,

    #[error("point does not lie on the hypersurface")]
    PointNotOnHypersurface,

    #[error("point is singular on the hypersurface")]
    SingularPoint,

    #[error("resultant computation failed: {0}")]
    ResultantFailed(String),

    #[error("interpolation failed: {0}")]
    InterpolationFailed(String),

    #[error("degenerate boundary factor: {0}")]
    DegenerateBoundary(String),

    #[error("no exact {exponent}-th root of {value}")]
    InexactRoot { value: String, exponent: u32 },

    #[error("cofactor certificate does not reproduce form {0}")]
    CertificateMismatch(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl ElimError {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            ElimError::NvarsMismatch { .. } => "nvars-mismatch",
            ElimError::VariableOutOfRange { .. } => "variable-out-of-range",
            ElimError::ZeroPolynomial => "zero-polynomial",
            ElimError::NotHomogeneous(_) => "not-homogeneous",
            ElimError::InvalidInput(_) => "invalid-input",
            ElimError::Parse { .. } => "parse",
            ElimError::DegreeTooSmall(_) => "degree-too-small",
            ElimError::EqualPoints => "equal-points",
            ElimError::PointNotOnHypersurface => "point-not-on-hypersurface",
            ElimError::SingularPoint => "singular-point",
            ElimError::ResultantFailed(_) => "resultant-failed",
            ElimError::InterpolationFailed(_) => "interpolation-failed",
            ElimError::DegenerateBoundary(_) => "degenerate-boundary",
            ElimError::InexactRoot { .. } => "inexact-root",
            ElimError::CertificateMismatch(_) => "certificate-mismatch",
            ElimError::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, ElimError>;
