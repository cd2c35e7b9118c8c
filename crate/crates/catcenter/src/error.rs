use thiserror::Error;

/// Failures that are not law violations: malformed input, unmet
/// preconditions, shape mismatches. Law violations live in a [`Report`].
///
/// [`Report`]: crate::report::Report
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("empty object set")]
    EmptyObjects,
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("not strict: {0}")]
    NotStrict(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("candidate cap exceeded: {0}")]
    CapExceeded(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    /// A structure file that does not parse or does not resolve.
    #[error("{origin}:{line}: {message}")]
    Spec { origin: String, line: usize, message: String },
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand used by the table code when an index falls outside its range.
pub(crate) fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}
