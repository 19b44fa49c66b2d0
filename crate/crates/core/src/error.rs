use thiserror::Error;

/// Errors raised anywhere in the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = 1")]
    PoleAtOne,
    #[error("alphabet mismatch: `{0}` vs `{1}`")]
    AlphabetMismatch(String, String),
    #[error("no image for generator `{0}`")]
    MissingImage(String),
    #[error("rewrite step limit of {0} exceeded")]
    StepLimitExceeded(usize),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("N must be a non-negative even integer, got {0}")]
    OddN(i64),
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("truncation invariant violated: {0}")]
    Truncation(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
