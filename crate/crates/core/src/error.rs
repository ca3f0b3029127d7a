use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("no arc with index {0}")]
    NoSuchArc(usize),

    #[error("no crossing with index {0}")]
    NoSuchCrossing(usize),

    #[error("{what}: {n} crossings exceeds the limit of {limit}")]
    LimitExceeded { what: &'static str, n: usize, limit: usize },

    #[error("rational coefficients are unavailable: {0}")]
    FieldUnsupported(String),

    #[error("differential does not square to zero at homological degree {t}, q = {q}")]
    NotAComplex { t: i64, q: i64 },

    #[error("Khovanov table is empty")]
    EmptyTable,

    #[error("inconsistent table: {0}")]
    InconsistentTable(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
