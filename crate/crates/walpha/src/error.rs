//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum WalphaError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("codec error: {0}")]
    Codec(String),

    /// A requested computation is outside the computed backend's range
    /// (unsupported type, rank cap, or size cap). The data backend may
    /// still serve it.
    #[error("capability error: {0}")]
    Capability(String),

    #[error("structural error: {0}")]
    Structure(String),

    /// Internal consistency failure: a mathematical invariant the engine
    /// relies on did not hold. Always a bug or corrupted ingested data.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("data bundle error: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, WalphaError>;
