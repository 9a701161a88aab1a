use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector argument contains NaN or infinite entries.
    #[error("non-finite entry in input vector")]
    NonFinite,

    /// A gauge family was constructed with parameters outside its domain.
    #[error("invalid gauge parameter: {0}")]
    InvalidParameter(String),

    /// An iterative kernel exhausted its iteration budget.
    #[error("failed to converge: {0}")]
    NonConvergence(&'static str),

    /// A support functional was requested at the zero element.
    #[error("support functional is undefined at the zero element")]
    ZeroElement,

    /// Operands have incompatible dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A matrix claimed to be Hermitian is not, within tolerance.
    #[error("matrix is not Hermitian (max asymmetry {0:.3e})")]
    NotHermitian(f64),

    /// Malformed run configuration: bad gauge string, out-of-range dimension, ...
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
