use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("characteristic {0} is not a supported prime")]
    NonPrimeModulus(u64),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("no irreducible polynomial of degree {d} found over F_{p}")]
    NoIrreduciblePolynomialFound { p: u64, d: u32 },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("inconsistent variable lists: {0}")]
    InconsistentVariableLists(String),
    #[error("division is not exact")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
