use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("dimension mismatch: ideal has {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty generator set")]
    EmptyGenerators,
    #[error("negative exponent {value} in integral context")]
    NegativeExponent { value: i64 },
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("integral closure is only implemented for 2 variables, got {0}")]
    UnsupportedDimension(usize),
    #[error("first ideal is not contained in the second")]
    NotContained,
    #[error("value groups differ: {left} vs {right}")]
    GroupMismatch { left: String, right: String },
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("invalid value group: {0}")]
    InvalidGroup(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
