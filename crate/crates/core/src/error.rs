use thiserror::Error;

/// Errors produced by the enclosure and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("division by an interval containing zero")]
    DivisionByZero,

    #[error("logarithm of non-positive argument {0}")]
    NonPositiveLog(String),

    /// The requested width could not be met at the given precision; the
    /// caller should raise `precision_bits`.
    #[error("precision of {bits} bits cannot reach width {target} (achieved {achieved})")]
    InsufficientPrecision {
        bits: u32,
        target: String,
        achieved: String,
    },

    #[error("argument shift of {0} terms exceeds the summation cap")]
    ShiftTooLarge(u64),

    #[error("gamma enclosure rejected: {0}")]
    BadGamma(String),

    #[error("internal enclosure failure: {0}")]
    Internal(String),

    #[error("failure at n = {n}: {source}")]
    AtIndex { n: u64, source: Box<Error> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn at(self, n: u64) -> Self {
        Error::AtIndex {
            n,
            source: Box::new(self),
        }
    }
}
