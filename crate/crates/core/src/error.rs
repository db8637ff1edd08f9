use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid slope: {0}")]
    InvalidSlope(String),

    #[error("matrix [[{0}]] has determinant {1}, expected 1")]
    Determinant(String, String),

    #[error("value outside the domain of {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An arithmetic identity that must hold by construction did not.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    /// True for errors caused by bad input rather than broken invariants.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Consistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
