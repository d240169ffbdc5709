use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero polynomial has no degree")]
    UndefinedDegree,
    #[error("step must be nonzero")]
    InvalidStep,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("interpolation nodes must be pairwise distinct (duplicate node {0})")]
    DegenerateNodes(String),
    #[error("index {index} out of range for {len} nodes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("polynomial degree {degree} exceeds grid size n = {n}")]
    DegreeOverflow { degree: usize, n: usize },
    #[error("value out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
