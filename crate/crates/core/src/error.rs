use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid variable {kind}[{i},{j}]: {reason}")]
    InvalidVariable {
        kind: char,
        i: u32,
        j: u32,
        reason: &'static str,
    },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid term: {0}")]
    InvalidTerm(String),

    #[error("cycle {cycle} has an odd number ({count}) of b-factors")]
    OddBCycle { cycle: usize, count: usize },

    #[error("double factorial is only defined for odd arguments >= -1, got {0}")]
    EvenDoubleFactorial(i64),

    #[error("size {n} out of range: {reason}")]
    SizeOutOfRange { n: usize, reason: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("matrix entry ({row},{col}) is not of the form a·x + c·y with x an a-variable and y a b-variable")]
    NotExpandable { row: usize, col: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
