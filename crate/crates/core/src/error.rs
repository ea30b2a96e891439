use num_rational::BigRational;
use thiserror::Error;

/// Errors raised by the exact-arithmetic and tree routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value is rational: {0}")]
    RationalValue(BigRational),
    #[error("denominator changes sign inside the interval")]
    SignChange,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("triple {0} is not a node of the extended Markoff tree")]
    NotInTree(String),
    #[error("triple {0} has no position in the endomorphism tree")]
    NotInPsiTree(String),
    #[error("position {0} is outside the window")]
    OutOfWindow(usize),
    #[error("zero quadratic form")]
    ZeroForm,
    #[error("word admits no palindromic factorization: {0}")]
    FactorizationFailure(String),
    #[error("enclosures from the two constructions are disjoint: {0}")]
    MethodDisagreement(String),
    #[error("enclosure too wide to decide an integer part; retry with a tighter precision")]
    PrecisionExhausted,
    #[error("quadratic irrationals from different fields: sqrt({0}) vs sqrt({1})")]
    IncompatibleFields(String, String),
    #[error("partial quotient does not fit in a machine word")]
    DigitOverflow,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
