use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("budget exceeded: {what} (limit {limit})")]
    BudgetExceeded { what: String, limit: u64 },
    #[error("trivial code: {0}")]
    TrivialCode(String),
    /// A mathematical precondition failed; the message carries a witness.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A theorem-backed assertion did not hold on a verified instance.
    #[error("implementation contradiction: {0}")]
    Contradiction(String),
    #[error("unknown name: {0}")]
    Unknown(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn budget(what: impl Into<String>, limit: u64) -> Self {
        Error::BudgetExceeded { what: what.into(), limit }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
