use thiserror::Error;

use crate::exactlin::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("field mismatch: {0:?} vs {1:?}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch in {op}: expected {expected}, got {got}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("singular map: {0}")]
    SingularMap(String),
    #[error("missing structure: {0}")]
    MissingStructure(&'static str),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("closure failure: {0}")]
    ClosureFailure(String),
    #[error("bimodule check failed: {0}")]
    BimoduleCheckFailure(String),
    #[error("bicomodule check failed: {0}")]
    BicomoduleCheckFailure(String),
    #[error("coaction interchange failed: {0}")]
    CoactionInterchangeFailure(String),
    #[error("crossing check failed: condition {0}")]
    CrossingCheckFailure(String),
    #[error("Yetter-Drinfel'd check failed: {0}")]
    YDCheckFailure(String),
    #[error("four-angle check failed: {0}")]
    FourAngleCheckFailure(String),
    #[error("double-module check failed: {0}")]
    DoubleModuleCheckFailure(String),
    #[error("isomorphism failure: {0}")]
    IsomorphismFailure(String),
    #[error("wiring error: {0}")]
    Wiring(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
