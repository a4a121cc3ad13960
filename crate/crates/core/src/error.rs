use thiserror::Error;

/// Errors raised by the arithmetic, algebra and counting routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero modulo {modulus}")]
    DivisionByZero { modulus: u64 },

    #[error("{0} is not a prime >= 5")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("singular input: {0}")]
    Singular(String),

    #[error("refusing to run {what} at p = {p}: bound is {bound}")]
    Refused { what: &'static str, p: u64, bound: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A mathematical invariant that should hold by construction failed.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
