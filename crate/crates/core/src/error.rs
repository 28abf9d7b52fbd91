use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("operand is the empty set")]
    EmptySet,
    #[error("set is not a cone")]
    NotACone,
    #[error("point does not belong to the set")]
    NotInSet,
    #[error("point is outside the domain of the function")]
    OutsideDomain,
    #[error("function is not known to be Lipschitz near the basepoint")]
    NotLipschitz,
    #[error("point is not on the boundary of the solution set")]
    NotOnBoundary,
    #[error("hypothesis not satisfied: {0}")]
    NotApplicable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operation requires a polyhedral norm")]
    NonPolyhedralNorm,
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
