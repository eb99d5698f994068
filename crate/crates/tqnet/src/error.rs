use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Pajek { line: usize, message: String },
    #[error("{path}: {message}")]
    NetsJson { path: String, message: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Network(#[from] tqnet_core::Error),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn pajek(line: usize, message: impl Into<String>) -> Error {
    Error::Pajek { line, message: message.into() }
}
