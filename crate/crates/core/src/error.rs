use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("order cap exceeded: closure grew past {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("lattice cap exceeded: group of order {order} is above the enumeration cap {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },

    #[error("element is not a member of group {group}")]
    NotInGroup { group: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),

    #[error("bad builtin parameters for `{name}`: {reason}")]
    BadParameters { name: String, reason: String },

    #[error("{path}: parse error at line {line}, column {column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    InvalidGroupFile { path: PathBuf, message: String },

    #[error("group {name} has order {actual}, expected {expected}")]
    OrderMismatch {
        name: String,
        expected: usize,
        actual: usize,
    },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown report format `{0}`")]
    UnknownFormat(String),

    #[error("unknown omega class `{0}`")]
    UnknownOmegaClass(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
