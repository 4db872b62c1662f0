use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse rational `{0}`")]
    ParseRational(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("{0} is undefined for the zero vector")]
    ZeroVector(&'static str),

    #[error("index set must be nonempty")]
    EmptyIndexSet,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid functional family: {0}")]
    InvalidFamily(String),

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("instance too large for enumeration: {0}")]
    TooLarge(String),

    #[error("certificate value {claimed} does not match re-evaluated witness value {recomputed}")]
    CertificateMismatch { claimed: String, recomputed: String },

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("cannot write output: {0}")]
    Output(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Output(err.to_string())
    }
}
