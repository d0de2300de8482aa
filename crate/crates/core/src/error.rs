use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands live over different coefficient fields.
    #[error("field descriptor mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },

    /// Input outside the domain of an operation (zero order, non-cyclic group, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data violates a structural invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// The request is well-formed but beyond a configured size bound.
    #[error("capability limit: {0}")]
    Capability(String),

    /// A Mackey functor is missing data needed by the computation.
    #[error("incomplete Mackey functor: {0}")]
    IncompleteMackey(String),

    /// Shapes of two linear objects do not fit together.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Truncated periodic/negative cyclic homology changed when the column
    /// cutoff was increased, so no value is reported.
    #[error("{theory} not stabilized at cutoff {cutoff}: {at_cutoff:?} vs {at_next:?}")]
    NotStabilized {
        theory: String,
        cutoff: usize,
        at_cutoff: Vec<usize>,
        at_next: Vec<usize>,
    },

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
