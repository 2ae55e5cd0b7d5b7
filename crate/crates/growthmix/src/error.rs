//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by distribution evaluation, model construction, and fitting.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Vector/matrix dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A matrix that must be symmetric positive definite failed to factorize.
    #[error("matrix not positive definite: {0}")]
    NotPositiveDefinite(String),

    /// The requested model is not identifiable from the data shape.
    #[error("identifiability error: {0}")]
    Identifiability(String),

    /// Invalid model or run configuration.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Every EM start failed or was degenerate.
    #[error("fit failed: {0}")]
    FitFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
