use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("conductor {requested} exceeds the configured bound {bound}")]
    ConductorOverflow { requested: u32, bound: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("algebra is not semisimple: {0}")]
    NotSemisimple(String),

    #[error("could not split {0} over the available cyclotomic fields")]
    SplitFailure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("antipode is not invertible")]
    NonInvertibleAntipode,

    #[error("linear system has no solution: {0}")]
    NoSolution(String),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
