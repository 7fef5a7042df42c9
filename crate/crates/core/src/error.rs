use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadonError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Some `d+1` points are affinely dependent. Labels are 1-based.
    #[error("degenerate input: points {subset:?} are affinely dependent")]
    NotGeneralPosition { subset: Vec<usize> },

    /// A geometric step had no strict solution (e.g. an apex that is not a
    /// hull vertex cannot be separated).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("generator gave up after {attempts} attempts without a general-position sample")]
    GeneratorFailure { attempts: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl RadonError {
    /// True for both flavours of degenerate input.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, RadonError::NotGeneralPosition { .. } | RadonError::Degenerate(_))
    }
}

pub type Result<T, E = RadonError> = std::result::Result<T, E>;
