use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sign sequence must not be empty")]
    EmptySequence,
    #[error("invalid sign character {0:?}; expected '+' or '-'")]
    InvalidSign(char),
    #[error("a signomial needs at least one term")]
    EmptySignomial,
    #[error("exponents must be strictly increasing (position {index})")]
    NonIncreasingExponents { index: usize },
    #[error("coefficient at position {index} is zero or not finite")]
    InvalidCoefficient { index: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("exponent {exponent} coincides with a term; the derivative step would cancel it")]
    DegenerateTerm { exponent: f64 },
    #[error("index {index} is not a sign variation")]
    NotAVariation { index: usize },
    #[error("inadmissible root count: {p} roots against {k} variations (k - p must be even and non-negative)")]
    Inadmissible { k: usize, p: usize },
    #[error("linear system is ill-conditioned (estimated condition {condition:.3e})")]
    IllConditioned { condition: f64 },
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("trinomial does not have a double root")]
    NotDoubleRoot,
    #[error("unsupported exponent pattern {0:?}")]
    UnsupportedPattern(Vec<i64>),
    #[error("the zero polynomial has no finite root count")]
    ZeroPolynomial,
    #[error("constant term is zero: 0 is a root")]
    ZeroConstantTerm,
    #[error("degree {0} is not supported (maximum is 6)")]
    UnsupportedDegree(usize),
    #[error("root abscissa {0} is not a positive finite number")]
    InvalidAbscissa(f64),
    #[error("duplicate root abscissa {0}")]
    DuplicateAbscissa(f64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
