use thiserror::Error;

/// Errors raised by the algebra, family, group and homology layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("unknown word letter `{0}`")]
    UnknownLetter(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("element is a zero divisor in the square-root algebra at t = {0}")]
    ZeroDivisor(String),

    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),

    #[error("point ({0}) is not a critical point")]
    NotCritical(String),

    #[error("fiber at t = {0} is singular")]
    SingularFiber(String),

    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(String),

    #[error("map does not preserve the cubic")]
    NotAutomorphism,

    #[error("jacobian determinant is not a constant unit: {0}")]
    NonConstantJacobian(String),

    #[error("point ({0}) is not one of the four singular points of the fiber t = 2")]
    NotSingularPoint(String),

    #[error("affine residue ({0}) is not in the stabilizer of the cubic")]
    NotInStabilizer(String),

    #[error("alphabet mismatch: {0}")]
    Alphabet(String),

    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
}

impl Error {
    /// Errors that come from malformed textual input rather than from the
    /// mathematics.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::UnknownVariable { .. } | Error::UnknownLetter(_) | Error::ZeroDenominator
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
