use thiserror::Error;

use crate::monomial::MonomialIdeal;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("no stabilization up to p = {p_max} (computed {} terms)", chain.len())]
    NotStabilized {
        p_max: u64,
        /// `(p, J_p)` for every index that was computed.
        chain: Vec<(u64, MonomialIdeal)>,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("integer overflow while {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
