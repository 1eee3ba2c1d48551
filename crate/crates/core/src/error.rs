use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("incompatible parameters: {0}")]
    Incompatible(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("data error: {0}")]
    Data(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("bound propagation did not reach a fixpoint after {0} rounds")]
    NonConvergence(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
