use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("accuracy not reached: {message} (best estimate {estimate:e}, error {error:e})")]
    Accuracy {
        message: String,
        estimate: f64,
        error: f64,
    },
    #[error("coefficient table too short: need index {needed}, have {available}")]
    TableTooShort { needed: usize, available: usize },
    #[error("series did not converge: {0}")]
    Convergence(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
