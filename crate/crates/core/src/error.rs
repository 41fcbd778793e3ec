use std::io;

use thiserror::Error;

/// Errors produced by plan construction, the transform pipeline, and file I/O.
#[derive(Debug, Error)]
pub enum RicError {
    #[error("compressed length {c} does not divide signal length {n}")]
    NonDivisor { n: usize, c: usize },

    #[error("value out of range: {0}")]
    Range(String),

    #[error("length mismatch: expected {expected} samples, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("sequence must contain at least one sample")]
    Empty,

    #[error("non-finite sample at index {0}")]
    NonFinite(usize),

    #[error("no plan within max_n meets the tolerance (best achievable relative error {best_error:e})")]
    Infeasible { best_error: f64 },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl RicError {
    pub(crate) fn parse_at_line(line: usize, message: impl Into<String>) -> Self {
        RicError::Parse {
            location: format!("line {line}"),
            message: message.into(),
        }
    }

    pub(crate) fn parse_at_offset(offset: usize, message: impl Into<String>) -> Self {
        RicError::Parse {
            location: format!("byte offset {offset}"),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, RicError>;
