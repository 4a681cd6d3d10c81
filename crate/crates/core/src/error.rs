use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("variable count {0} outside supported range 1..=20")]
    VariableCount(u32),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("variable x{index} out of range for n={n}")]
    VariableOutOfRange { index: u32, n: u32 },

    #[error("brute-force oracle limited to n <= {max}, got n={n}")]
    OracleTooLarge { n: u32, max: u32 },

    #[error("malformed genotype: {0}")]
    MalformedGenotype(String),

    #[error("invalid hex truth table: {0}")]
    Hex(String),

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("operator `{op}` does not apply to {encoding} genotypes")]
    OperatorMismatch { op: String, encoding: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("corrupt or missing results: {}", .0.iter().map(|p| p.display().to_string()).collect::<Vec<_>>().join(", "))]
    Results(Vec<PathBuf>),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
