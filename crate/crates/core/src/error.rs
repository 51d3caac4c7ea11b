//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("element does not belong to group {group}: {reason}")]
    ElementMismatch { group: String, reason: String },

    #[error("no Haar probability measure on noncompact group {0}")]
    NoHaarMeasure(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operator is not unitary: deviation {deviation:.3e} exceeds {tol:.3e}")]
    NotUnitary { deviation: f64, tol: f64 },

    #[error("multiplier is not circle-valued: |m| = {0}")]
    NotCircleValued(f64),

    #[error("superoperator picture mismatch: expected {expected}, found {found}")]
    PictureMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("not a valid density matrix: {0}")]
    InvalidDensity(String),

    #[error("serialization: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
