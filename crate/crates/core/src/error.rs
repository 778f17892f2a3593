use thiserror::Error;

use crate::exprfix::{EvalError, ParseError};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A combinatorial or factorization bound was exceeded.
    #[error("resource limit `{guard}` exceeded: {detail}")]
    ResourceLimit { guard: &'static str, detail: String },

    /// An exact division promised by the theory left a remainder.
    #[error("internal consistency violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Eval(#[from] EvalError),

    #[error("fixture line {line}: {detail}")]
    Fixture { line: usize, detail: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
