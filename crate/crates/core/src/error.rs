use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure raised by a Groebner run that ran out of its resource allowance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetExceeded {
    #[error("pair-reduction budget of {limit} exhausted")]
    PairReductions { limit: usize },
    #[error("basis element of degree {degree} exceeds the degree cap {limit}")]
    Degree { degree: u32, limit: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("variable x{index} outside ring with {nvars} variables")]
    VariableOutOfRange { index: u32, nvars: u32 },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("not a monomial: {0}")]
    NotMonomial(String),
    #[error("monomial ideal is not square-free: {0}")]
    NotSquareFree(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("{vars} relevant variables exceed the enumeration cap {cap}")]
    VariableCap { vars: usize, cap: usize },
    #[error("invalid path parameters: {0}")]
    InvalidParams(String),
    #[error("no verified block pair available for t={0}")]
    PairUnavailable(u32),
    #[error("block pair rejected: {0}")]
    PairRejected(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("certificate invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
