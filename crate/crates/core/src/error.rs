use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: index {0} repeated")]
    NotAPermutation(usize),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension {0} unsupported (must be 1..=16)")]
    UnsupportedDimension(usize),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("bracket expects {expected} arguments, got {got}")]
    BracketArity { expected: usize, got: usize },
    #[error("expected a pure grade-1 achiral element")]
    NotGradeOne,
    #[error("metric is not symmetric")]
    NonSymmetricMetric,
    #[error("metric is degenerate")]
    DegenerateMetric,
    #[error("quasi-Hodge volumes incompatible: reversion(Upsilon) contracted with Theta is {0}, expected 1")]
    IncompatibleVolumes(String),
    #[error("Hodge star undefined: {0}")]
    HodgeUndefined(String),
    #[error("value is irrational: {0}")]
    Irrational(String),
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("lex error at offset {offset}: {message}")]
    Lex { offset: usize, message: String },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("type error: {0}")]
    Type(String),
}

pub type Result<T> = std::result::Result<T, Error>;
