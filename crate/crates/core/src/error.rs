use thiserror::Error;

use crate::rootsys::TypeTag;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported simple type {family}{rank}")]
    UnsupportedType { family: char, rank: usize },
    #[error("pairing against the zero vector")]
    ZeroVector,
    #[error("vector is not in the weight lattice: pairing with simple root {index} is {value}")]
    NonIntegral { index: usize, value: String },
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight {weight:?} has length {got}, expected {expected}")]
    LengthMismatch { weight: Vec<i64>, got: usize, expected: usize },
    #[error("V({highest:?}) has dimension {dim}, above the cap of {cap}")]
    DimensionCapExceeded { highest: Vec<i64>, dim: String, cap: u64 },
    #[error("root system mismatch: {left} vs {right}")]
    TagMismatch { left: TypeTag, right: TypeTag },
    #[error("not the weight system of a representation: {0}")]
    NotACharacter(String),
    #[error("polynomial degree {degree} exceeds the expansion cap {cap}")]
    CapExceeded { degree: u64, cap: u64 },
    #[error("{0} has no {1} roots")]
    NoSuchRootClass(TypeTag, &'static str),
    #[error("pencil size {size} exceeds the cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("base change matrix is singular")]
    SingularB,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
