//! Error type shared across the crate.

use thiserror::Error;

/// Domain errors. Variant names double as the machine-readable error codes
/// emitted by the CLI.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (residual {residual:e} > tol {tol:e})")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("matrix is not a proper rotation (residual {residual:e})")]
    InvalidRotation { residual: f64 },

    #[error("matrix is not unitary (residual {residual:e})")]
    InvalidUnitary { residual: f64 },

    #[error("correlation matrix is not symmetric (residual {residual:e})")]
    NotSymmetricCorrelation { residual: f64 },

    #[error("correlation matrix is not skew-symmetric (residual {residual:e})")]
    NotSkewSymmetric { residual: f64 },

    #[error("correlation matrix is zero")]
    ZeroCorrelation,

    #[error("term is not antisymmetric under SWAP")]
    NotAntisymmetric,

    #[error("term is not symmetric under SWAP")]
    NotSymmetric,

    #[error("term is 1-local (zero correlation matrix)")]
    OneLocal,

    #[error("weight matrix has no unique maximum entry")]
    DegenerateWeights,

    #[error("coloring is not proper on the source graph")]
    ImproperColoring,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("time budget exhausted after {0} seconds")]
    Timeout(u64),

    #[error("argument outside domain: {0}")]
    DomainError(String),

    #[error("artifact kind does not match this operation: {0}")]
    WrongArtifact(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Short machine-readable code (the variant name).
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotHermitian { .. } => "NotHermitian",
            Error::InvalidRotation { .. } => "InvalidRotation",
            Error::InvalidUnitary { .. } => "InvalidUnitary",
            Error::NotSymmetricCorrelation { .. } => "NotSymmetricCorrelation",
            Error::NotSkewSymmetric { .. } => "NotSkewSymmetric",
            Error::ZeroCorrelation => "ZeroCorrelation",
            Error::NotAntisymmetric => "NotAntisymmetric",
            Error::NotSymmetric => "NotSymmetric",
            Error::OneLocal => "OneLocal",
            Error::DegenerateWeights => "DegenerateWeights",
            Error::ImproperColoring => "ImproperColoring",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::TooLarge(_) => "TooLarge",
            Error::Timeout(_) => "Timeout",
            Error::DomainError(_) => "DomainError",
            Error::WrongArtifact(_) => "WrongArtifact",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
