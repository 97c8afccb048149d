use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("bound not applicable: {0}")]
    BoundInapplicable(String),

    /// A bound that requires a regular graph was asked for on an
    /// irregular one.
    #[error("graph is not regular: {0}")]
    NotRegular(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("numeric failure: {0}")]
    NumericFailure(String),

    #[error("LP solver failure: {0}")]
    SolverFailure(String),

    /// The requested computation collapses (e.g. the power graph is
    /// complete, or the minor-polynomial LP has no degrees of freedom).
    #[error("degenerate case: {0}")]
    Degenerate(String),

    #[error("no feasible subproblem produced a bound")]
    BoundUnavailable,

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    /// An exact search ran out of budget; the best proven bracket is
    /// carried along so callers can report partial results.
    #[error("search budget exhausted; value lies in [{lower}, {upper}]")]
    Timeout { lower: u64, upper: u64 },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
