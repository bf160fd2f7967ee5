use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("polynomial is negative just to the right of zero")]
    NotPositiveNearZero,

    #[error("a term needs at least one tail entry")]
    EmptyTail,

    #[error("a symbolic polynomial needs at least one term")]
    EmptyPolynomial,

    #[error("terms are not compatible (length or head differ)")]
    IncompatibleTerms,

    #[error("scalar has {scalar} slots but the term needs {needed}")]
    ArityMismatch { scalar: usize, needed: usize },

    #[error("length {len} exceeds the arity bound k = {k}")]
    DegreeExceedsK { len: usize, k: usize },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("{0} is not a member of the ground ring")]
    NotInGround(Rational),

    #[error("result {0} falls outside the ground ring")]
    OutsideGround(Rational),

    #[error("argument shares a compatible term with the shifting polynomial")]
    NotIrreducible,

    #[error("invalid ground ring: {0}")]
    InvalidGround(String),

    #[error("invalid partial sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid search bounds: {0}")]
    InvalidBounds(String),

    #[error("index set must be nonempty and contain only positive indices")]
    InvalidIndexSet,

    #[error("brute-force universe of {0} candidates exceeds the limit of 1000000")]
    UniverseTooLarge(u128),
}

pub type Result<T> = std::result::Result<T, Error>;
