use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget {requested} exceeds the limit {limit}")]
    Budget { requested: usize, limit: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
