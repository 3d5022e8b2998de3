use thiserror::Error;

/// Errors surfaced by the library's checked constructors and verifiers.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter was outside its documented range (k < 1, l < 0, l > k, ...).
    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// A triple of weights failed the admissibility conditions at the given level.
    #[error("triple ({a}, {b}, {c}) is not admissible at level {k}")]
    NotAdmissible { k: i64, a: i64, b: i64, c: i64 },

    /// A path failed validation; the list holds one message per violated condition.
    #[error("invalid path: {}", .0.join("; "))]
    InvalidPath(Vec<String>),

    /// Two objects that must share a level (or length) did not.
    #[error("mismatched operands: {0}")]
    Mismatch(String),

    /// A computation did not stabilize under the configured generation caps.
    #[error("result did not stabilize under caps: {0}")]
    NotStabilized(String),

    /// A golden data file could not be parsed or did not match.
    #[error("golden data: {0}")]
    Golden(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
