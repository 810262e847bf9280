use thiserror::Error;

/// Errors raised by the exact pipeline.
///
/// The CLI maps [`Error::Parse`] to exit code 1, [`Error::Internal`] to exit
/// code 3 and everything else to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("entry ({row}, {col}) has a pole on the imaginary axis at w = {omega}")]
    PoleOnAxis {
        row: usize,
        col: usize,
        omega: String,
    },

    #[error("entry ({row}, {col}) is improper (numerator degree exceeds denominator degree)")]
    Improper { row: usize, col: usize },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
