use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact over the integers")]
    NonExactDivision,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has a zero constant term")]
    ZeroConstantTerm,
    #[error("trinomial constant term must be non-zero")]
    ZeroConstant,
    #[error("invalid trinomial: {0}")]
    InvalidSpec(String),
    #[error("exponent profile undefined for n = 2m (n = {n})")]
    Degenerate { n: usize },
    #[error("constant {0} is not a prime power")]
    InvalidConstant(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("identity check failed: {0}")]
    IdentityViolation(String),
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("polynomial is not squarefree modulo {0}")]
    NotSquarefreeModP(u64),
    #[error("Hensel lifting failed: {0}")]
    LiftFailure(String),
    #[error("factor recombination exceeded {limit} subsets")]
    RecombinationLimit { limit: u64 },
}
