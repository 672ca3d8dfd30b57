//! Error type shared by all library operations.

use thiserror::Error;

/// Errors produced by evaluation, quadrature and verification routines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Equation or integrand parameters violate an invariant (n < 2, c = 0, ...).
    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    /// A (k, branch) pair outside the admissible range for the given equation.
    #[error("branch index out of range: {0}")]
    IndexOutOfRange(String),

    /// Requested operation needs more series terms than the expansion holds.
    #[error("series truncation too small: {0}")]
    TruncationTooSmall(String),

    /// An integral or accelerated sum failed to reach the requested tolerance.
    #[error("failed to converge: {0}")]
    NonConvergent(String),

    /// Evaluation method not admissible for the given parameters.
    #[error("method inadmissible: {0}")]
    MethodInadmissible(String),

    /// A stated precondition (sign condition, side restriction, ...) is violated.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// Even-order heat terms violate the negativity condition on the
    /// coefficient of the highest even exponent.
    #[error("sign condition violated: {0}")]
    SignConditionViolated(String),

    /// Grid cannot resolve the kernels placed on it.
    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    /// Operation does not support the given specification (e.g. fractional
    /// orders where moments need not exist).
    #[error("unsupported specification: {0}")]
    UnsupportedSpec(String),

    /// Result exceeds the representable range of the requested mode.
    #[error("overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
