use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCount { left: usize, right: usize },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown generator `{name}` at offset {offset}")]
    UnknownGenerator { name: String, offset: usize },

    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("unknown space `{0}`")]
    UnknownSpace(String),

    #[error("invalid space definition: {0}")]
    SpaceDefinition(String),

    #[error(
        "not a valid one-dimensional-quotient realization at this power: \
         Y applied to delta^{power} is not a multiple of delta^{k}",
        power = .k + 1
    )]
    NotProportional { k: usize },

    #[error("b-function points are not on a single polynomial: {0}")]
    Unstable(String),

    #[error("degree of u is {found}, expected {expected}")]
    DegreeMismatch { found: i64, expected: usize },

    #[error("operator is not radial: {0}")]
    NotRadial(String),

    #[error("presentations are incompatible: {0}")]
    Incompatible(String),

    #[error("{0}")]
    Usage(String),
}
