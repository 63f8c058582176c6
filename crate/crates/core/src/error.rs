use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unsupported size: {what} is {got}, cap is {cap}")]
    UnsupportedSize {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error(
        "power iteration did not converge after {iterations} iterations \
         (best estimate {best}, residual {residual:e})"
    )]
    ConvergenceFailure {
        best: f64,
        iterations: usize,
        residual: f64,
    },

    #[error("corpus incomplete: {0}")]
    CorpusIncomplete(String),

    #[error("corpus required: {0}")]
    CorpusRequired(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
