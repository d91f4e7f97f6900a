use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("vertex count {count} exceeds the cap of {cap}")]
    VertexCap { count: u128, cap: u64 },

    #[error("dimension mismatch: expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate {value} at position {position} is outside [0, {q})")]
    CoordinateOutOfRange { position: usize, value: i64, q: u32 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate point {point} (first seen on line {first})")]
    DuplicatePoint { line: usize, first: usize, point: String },

    #[error("point {0} is not a member of the set")]
    NotInSet(String),

    #[error("shatter candidate has {size} points, more than the limit of {limit}")]
    TooManyPoints { size: usize, limit: usize },

    #[error("shatter candidate repeats point {0}")]
    RepeatedPoint(String),

    #[error("{detector} requires {requirement}, got H({d},{q},{t})")]
    AmbientMismatch {
        detector: &'static str,
        requirement: &'static str,
        d: usize,
        q: u32,
        t: usize,
    },

    #[error("configuration cannot be turned into a witness: missing role {role}")]
    MissingRole { role: &'static str },

    #[error("no witness construction exists for {0} configurations")]
    NoWitnessConstruction(&'static str),

    #[error("constructed witness failed validation: {0}")]
    InvalidWitness(String),

    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),

    #[error("unknown claim {0:?}")]
    UnknownClaim(String),

    #[error("search needs {required} subsets, above the work cap of {cap}")]
    WorkCap { required: String, cap: u64 },
}
