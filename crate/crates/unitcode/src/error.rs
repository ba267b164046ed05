use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An exhaustive enumeration would exceed the configured budget.
    /// `required` is the number of codeword evaluations the call needs.
    #[error("enumeration budget exceeded: required {required} codeword evaluations, budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    /// A query that needs the minimum distance was made before computing it.
    #[error("minimum distance has not been computed for this code yet")]
    DistanceNotComputed,
}

pub type Result<T> = std::result::Result<T, Error>;
