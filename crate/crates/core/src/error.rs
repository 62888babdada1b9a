use thiserror::Error;

/// Errors raised by the algebra engine and its verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("division is not exact in the Laurent ring")]
    NotLaurent,

    #[error("evaluation failed: {0}")]
    Evaluation(String),

    #[error("matrix is not skew-symmetrizable: {0}")]
    NotSkewSymmetrizable(String),

    #[error("frozen coefficients violate reciprocity at direction {direction}")]
    Reciprocity { direction: usize },

    #[error("coefficient y_{index} is not a pure y-monomial")]
    NonMonomialCoefficient { index: usize },

    #[error("X-function of x_{index} is not homogeneous")]
    NotHomogeneous { index: usize },

    #[error("X-function of x_{index} has a negative exponent in y or z")]
    NegativeCoefficientExponent { index: usize },

    #[error("cluster contains two equal variables (positions {first} and {second})")]
    DuplicateClusterVariable { first: usize, second: usize },

    #[error("equivalent seeds carry different mutation degrees or frozen coefficients")]
    InconsistentDegreeTransport,

    #[error("unknown cluster variable: {0}")]
    UnknownVariable(String),

    #[error("initial data are incompatible: B*R differs from the other pattern's B*R")]
    IncompatibleInitialData,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("config error at {field}: {message}")]
    Config { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
