use thiserror::Error;

use crate::rep::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator index {index} outside 1..={n_generators}")]
    BadGeneratorIndex { index: usize, n_generators: usize },

    #[error("generator count {0} outside 1..={max}", max = crate::words::MAX_GENERATORS)]
    InvalidGeneratorCount(usize),

    #[error("words belong to different groups: {left} vs {right} generators")]
    GeneratorCountMismatch { left: usize, right: usize },

    #[error("classification requires exactly 2 generators, got {0}")]
    NotBinaryGroup(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid configuration: {} violation(s)", .0.len())]
    InvalidConfig(Vec<Violation>),

    #[error("operation needs 2 generators in dimension 2, config has {n_generators} in dimension {dim}")]
    ConfigMismatch { n_generators: usize, dim: usize },

    #[error("enumeration of {count} words exceeds the limit of {limit}")]
    ScanTooLarge { count: u128, limit: u128 },

    #[error("no valid configuration found after {attempts} rejected draws")]
    SamplingExhausted { attempts: usize },

    #[error("generator matrix {generator} does not square to the identity")]
    NotInvolutory { generator: usize },

    #[error("identity check failed: {0}")]
    Inconsistent(String),
}
