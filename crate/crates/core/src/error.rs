use thiserror::Error;

/// Errors raised by the algebra, poset and harness layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("profile mismatch: {0} vs {1}")]
    ProfileMismatch(String, String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        max: i64,
    },
    #[error("weight has length {got}, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("truncated series mismatch: {0}")]
    SeriesMismatch(String),
    #[error("negative exponent in {0}")]
    NegativeExponent(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial has no leading summand")]
    ZeroPolynomial,
    #[error("weight {0} is outside the {1} cone")]
    OutsideCone(String, String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("poset mismatch: {0}")]
    PosetMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degree {degree} exceeds cap {cap}")]
    DegreeExceedsCap { degree: i64, cap: i64 },
    #[error("resource limit reached: {0}")]
    ResourceLimit(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
