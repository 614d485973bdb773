use gav_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("{lambda} is not a root of a_{var}")]
    NotARoot { var: usize, lambda: String },
    #[error("operation needs alpha given as a product a_1(X1)...a_m(Xm)")]
    AlphaNotFactored,
    #[error("exact division failed: {0}")]
    ExactDivisionFailure(String),
    #[error("invalid exponential map: {0}")]
    InvalidMap(String),
    #[error("exponential map has not been verified")]
    UnverifiedMap,
    #[error("denominator {0} is not invariant")]
    NonInvariantDenominator(String),
    #[error("degree of the zero element is undefined")]
    ZeroElement,
    #[error("gcd condition fails: common factor {witness}")]
    GcdConditionFails { witness: String },
    #[error("presentation is not shifted at a root")]
    NotShifted,
    #[error("homogenized map fails {axiom}: {witness}")]
    HomogenizationFailed { axiom: String, witness: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("presentation does not have the required shape: {0}")]
    ShapeMismatch(String),
    #[error("line entry is not flagged non-trivial")]
    LineNotTrusted,
    #[error("line entry has no parametrization witness")]
    MissingWitness,
    #[error("condition (i) fails: {0}")]
    ConditionIFails(String),
    #[error("condition (iii) fails: {witness}")]
    ConditionIIIFails { witness: String },
    #[error("phi(alpha)/alpha is not a nonzero constant: {0}")]
    GammaNotConstant(String),
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("presentations are over different fields: {0} vs {1}")]
    FieldMismatch(String, String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
