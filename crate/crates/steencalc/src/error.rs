use thiserror::Error;

/// Errors shared across the crate.
///
/// The CLI maps these onto exit code 2 (input/usage errors); property
/// violations discovered while running a suite are not errors but failures
/// recorded in the suite report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown generator `{name}`")]
    UnknownGenerator { name: String },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("invalid algebra: {0}")]
    Algebra(String),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
