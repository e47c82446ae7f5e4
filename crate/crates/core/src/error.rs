use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series diverges: {0}")]
    Divergence(String),

    #[error("integrand is not integrable at coefficient n = {n}: {reason}")]
    NotIntegrable { n: usize, reason: String },

    #[error("truncation exceeded: {0}")]
    Truncation(String),

    #[error("grid too small: {0}")]
    DomainTooSmall(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported symbol: {0}")]
    UnsupportedSymbol(String),

    #[error("cannot parse rational {text:?}: {reason}")]
    ParseRational { text: String, reason: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
