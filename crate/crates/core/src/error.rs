use thiserror::Error;

/// Errors raised by the constructions and checks in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inversion of zero scalar")]
    SingularScalar,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("grading group mismatch: expected {expected:?}, found {found:?}")]
    GradingMismatch { expected: Vec<u64>, found: Vec<u64> },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("matrix is not ({mprime:?},{m:?})-admissible")]
    NotAdmissible { mprime: Vec<u64>, m: Vec<u64> },
    #[error("element is not in the kernel lattice")]
    NotInSublattice,
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

