use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: format error: {msg}")]
    Format { line: usize, msg: String },

    #[error("line {line}: value out of range: {msg}")]
    Range { line: usize, msg: String },

    #[error("line {line}: duplicate hyperedge {edge:?}")]
    Duplicate { line: usize, edge: Vec<usize> },

    #[error("declared complete but {missing} of {expected} hyperedges are missing")]
    Incomplete { missing: usize, expected: usize },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no success in {attempts} attempts (best monochromatic clique {best_clique}, bound {bound})")]
    AttemptsExhausted {
        attempts: usize,
        best_clique: usize,
        bound: usize,
    },

    #[error("no threshold in range {lo}..={hi}")]
    NoThreshold { lo: usize, hi: usize },

    #[error("internal error: {0}")]
    Internal(String),
}
