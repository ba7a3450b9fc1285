use thiserror::Error;

use crate::gfp::FVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("field order {p}^{d} does not fit in a machine word")]
    FieldTooLarge { p: u64, d: usize },

    #[error(
        "dimension mismatch: expected F_{expected_p}^{expected_d}, found F_{found_p}^{found_d}"
    )]
    DimensionMismatch {
        expected_p: u32,
        expected_d: usize,
        found_p: u32,
        found_d: usize,
    },

    #[error("coordinate {value} at position {position} is outside [0, {p})")]
    CoordinateOutOfRange { value: i64, position: usize, p: u32 },

    #[error("vector has {found} coordinates, expected {expected}")]
    WrongLength { expected: usize, found: usize },

    #[error("{what}: size {size} exceeds the configured cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        size: u64,
        cap: u64,
    },

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error(
        "connection set is not closed under negation: {element} is present but {missing} is not"
    )]
    SymmetryViolation { element: FVector, missing: FVector },

    #[error("projective point {0} given more than once")]
    DuplicateLine(FVector),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("linear map is singular")]
    SingularMap,

    #[error("vertex map has {found} entries, expected {expected}")]
    MapSizeMismatch { expected: usize, found: usize },

    #[error("{0}")]
    InvalidArgument(String),
}
