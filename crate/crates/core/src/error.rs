use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("truncation: {what} exceeds cutoff {cutoff}")]
    Truncation { what: String, cutoff: usize },

    #[error("unsupported generator {generator} in {realization} realization")]
    UnsupportedGenerator {
        generator: String,
        realization: &'static str,
    },

    #[error("internal consistency: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    pub fn is_truncation(&self) -> bool {
        matches!(self, Error::Truncation { .. })
    }
}
