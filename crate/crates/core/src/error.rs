use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid parameter k = {k} for family {family}")]
    InvalidParameter { family: &'static str, k: u32 },

    #[error("{composition} is not a member of {set}")]
    NotMember { composition: String, set: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("unsupported family {0}")]
    UnsupportedFamily(String),

    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("denominator constant term must be 1, got {0}")]
    NonUnitConstant(String),

    #[error("invalid recurrence signature: {0}")]
    InvalidSignature(String),

    #[error("need at least {needed} initial values, got {got}")]
    InsufficientInitialValues { needed: usize, got: usize },

    #[error("n = {n} exceeds the brute-force bound {bound}; raise the bound explicitly")]
    BoundExceeded { n: u32, bound: u32 },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
