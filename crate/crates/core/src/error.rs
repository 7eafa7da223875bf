use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("estimated group order {estimated} exceeds the element budget {budget}; pass --allow-large to override")]
    BudgetExceeded { estimated: u64, budget: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("decomposition target missing for simple {0}")]
    NoTarget(String),
    #[error("idempotent lifting did not converge after {0} steps")]
    LiftFailed(usize),
    #[error("malformed cache file {path}: {reason}")]
    CorruptCache { path: PathBuf, reason: String },
    #[error("parse error in {source_name} line {line}: {reason}")]
    Parse {
        source_name: String,
        line: usize,
        reason: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::OutOfScope(_) => 2,
            Error::BudgetExceeded { .. } => 3,
            Error::InvalidArgument(_) | Error::HypothesisViolated(_) | Error::Parse { .. } => 64,
            Error::Io(_) | Error::Json(_) | Error::CorruptCache { .. } => 74,
            Error::Inconsistency(_) | Error::NoTarget(_) | Error::LiftFailed(_) => 1,
        }
    }
}
