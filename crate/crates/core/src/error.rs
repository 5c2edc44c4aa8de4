use thiserror::Error;

/// Errors raised by the model, mixture, classifier and bound computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected alphabet size {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A domain-type invariant does not hold. The message names the invariant.
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("MLE on boundary: symbol {symbol} has zero count")]
    BoundaryMle { symbol: usize },

    #[error(
        "enumeration budget exceeded: {needed} {what} > limit {limit}; use Monte Carlo instead"
    )]
    BudgetExceeded {
        what: &'static str,
        needed: f64,
        limit: f64,
    },

    #[error("degenerate: zero Chernoff variance (p = q)")]
    Degenerate,

    #[error("lambda must lie in (0, 1), got {0}")]
    LambdaOutOfRange(f64),

    #[error("training length alpha * n = {alpha} * {n} is not an integer")]
    NonIntegerTraining { alpha: String, n: u64 },

    #[error("empty range: from {from} to {to} step {step}")]
    EmptyRange { from: u64, to: u64, step: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
