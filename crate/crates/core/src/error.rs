use thiserror::Error;

/// Errors surfaced to callers. Contract violations inside pure algebra
/// (mismatched variable counts, division by the zero polynomial) panic
/// instead, like integer division does.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("multiplicity vector must not be zero")]
    ZeroMultiplicity,

    #[error("reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
