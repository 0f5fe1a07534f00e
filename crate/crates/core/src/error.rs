use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no inverse of zero")]
    ZeroInverse,
    #[error("zero vector has no projective class")]
    ZeroVector,
    #[error("state and its partner are projectively equal")]
    DegenerateDual,
    #[error("zero superposition")]
    ZeroSuperposition,
    #[error("superposition coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("impossible outcome")]
    ImpossibleOutcome,
    #[error("sum undefined for non-disjoint states")]
    NonDisjointSum,
    #[error("no product-state image")]
    NoProductImage,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Malformed input as opposed to a well-formed request with no answer.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Dimension { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
