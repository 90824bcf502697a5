//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("sort error: {0}")]
    Sort(String),
    #[error("signature error: {0}")]
    Signature(String),
    #[error("ill-formed formula: {0}")]
    Formula(String),
    #[error("DNF matrix exceeds the size guard of {limit} literals")]
    DnfTooLarge { limit: usize },
    #[error("non-Horn sentence: {0}")]
    NonHorn(String),
    #[error("closure not saturated at height bound {bound}; refusing the unsound complement")]
    Unsaturated { bound: u32 },
    #[error("ground term universe too large: {0}")]
    UniverseTooLarge(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("evaluation error: {0}")]
    Eval(String),
    #[error("non-linear Nat atom in symbolic mode: {0}")]
    NonLinear(String),
    #[error("integer overflow in linear arithmetic")]
    Overflow,
    #[error("time budget exceeded")]
    TimeBudget,
    #[error("missing linear interpretation for {0}")]
    MissingInterpretation(String),
    #[error("witness extraction failed: no ground term of sort {sort} denotes {value}")]
    WitnessUnreached { sort: String, value: i64 },
    #[error("refused: {0}")]
    Refused(String),
    #[error("invalid job: {0}")]
    Job(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Usage-level errors exit with code 1; `Unknown` verdicts exit with 2.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::TimeBudget)
    }
}
