use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational `{0}` (expected `-?digits` or `-?digits/digits`)")]
    MalformedRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    /// A reciprocal or quotient by zero. `index` is the orbit index being
    /// computed, when known.
    #[error("division by zero{}", fmt_index(.index))]
    DivisionByZero { index: Option<i64> },
    #[error("bit budget of {budget} exceeded at index {index} ({bits} bits)")]
    BudgetExceeded { index: i64, bits: u64, budget: u64 },
    #[error("invalid system: {0}")]
    InvalidSpec(String),
    #[error("invalid initial conditions: {0}")]
    InvalidInitials(String),
    #[error("classification requires strictly positive initial values")]
    NonPositiveInitials,
    #[error("orbit too short: need {needed} points, have {have}")]
    OrbitTooShort { needed: usize, have: usize },
    #[error("index {0} is out of range")]
    IndexOutOfRange(i64),
    #[error("incompatible shape: {0}")]
    IncompatibleShape(String),
}

fn fmt_index(index: &Option<i64>) -> String {
    match index {
        Some(i) => format!(" at index {i}"),
        None => String::new(),
    }
}
