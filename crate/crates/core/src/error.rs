use crate::laurent::ParseError;

/// Errors reported by the library. Entry indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("tuple is empty")]
    EmptyTuple,
    #[error("entry {index} is zero")]
    ZeroEntry { index: usize },
    #[error("entry {index} has the opposite sign to entry 1 (tuples must be sign-homogeneous)")]
    MixedSigns { index: usize },
    #[error("tuple {tuple} has continued fraction {value}, which is not a knot or link fraction")]
    DegenerateFraction { tuple: String, value: &'static str },
    #[error("invalid fraction: {0}")]
    InvalidFraction(String),
    #[error("fraction {0} has |q| > p and no sign-homogeneous tuple; reduce q modulo p first")]
    FractionOutOfRange(String),
    #[error("writhe undefined for 2-component links without orientation choice")]
    WritheUndefined,
    #[error("{what} is {size}, above the limit of {limit}")]
    ResourceLimit { what: &'static str, size: u128, limit: u128 },
    #[error("malformed tuple: {0}")]
    MalformedTuple(ParseError),
    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
