use thiserror::Error;

/// Errors raised by ring arithmetic, reduction and specialization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands belong to coefficient rings with different `m`.
    #[error("ring mismatch: m = {left} vs m = {right}")]
    RingMismatch { left: usize, right: usize },

    #[error("invalid rank m = {0}; m must be at least 1")]
    InvalidRank(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A value that must be invertible (q, e_m) specialized to zero.
    #[error("non-unit: {0}")]
    NonUnit(String),

    #[error("evaluation error: {0}")]
    Evaluation(String),

    /// The input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal structural fact failed to hold at runtime.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_rank(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidRank(m))
    } else {
        Ok(())
    }
}
