use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for {num_vertices} vertices")]
    IndexOutOfRange { index: usize, num_vertices: usize },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("operation is undefined for the 0-dimensional point")]
    UndefinedForPoint,

    #[error("face lattice oracle limited to {limit} vertices, got {num_vertices}")]
    OracleLimitExceeded { limit: usize, num_vertices: usize },

    #[error("face lattice is not graded: {0}")]
    LatticeNotGraded(String),

    #[error("argument out of domain: {0}")]
    OutOfDomain(String),

    #[error("marcus limit is undefined for alpha = 0")]
    UndefinedForZero,

    #[error("wheel is not polytopal (not positively 2-spanning)")]
    NotPolytopal,

    #[error("malformed wheel: {0}")]
    MalformedWheel(String),

    #[error("unsupported alpha {0}: exhaustive generators exist only for alpha <= 2")]
    UnsupportedAlpha(usize),

    #[error("malformed canonical key: {0}")]
    MalformedKey(String),

    #[error("json: {0}")]
    Json(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
