use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cxt line {line}: {message}")]
    Cxt { line: usize, message: String },

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid document: {0}")]
    Document(String),

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("mass function {name:?} sums to {sum}, expected 1")]
    NotNormalized { name: String, sum: String },

    #[error("mass function {name:?}: label {label:?} matches no concept")]
    UnresolvedLabel { name: String, label: String },

    #[error("mass function {name:?}: label {label:?} is ambiguous")]
    AmbiguousLabel { name: String, label: String },

    #[error("invalid mass function: {0}")]
    InvalidMass(String),

    #[error("{what} exceeds capacity: {actual} > {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("total conflict at combination step {step}: no combined mass is defined")]
    TotalConflict { step: usize },

    #[error("mass functions live on different lattices")]
    LatticeMismatch,

    #[error("not a belief function: recovered mass {value} at {witness}")]
    NegativeMass { witness: String, value: String },

    #[error("not a belief function: bel({lower}) = {lower_value} > bel({upper}) = {upper_value}")]
    NotMonotone {
        lower: String,
        upper: String,
        lower_value: String,
        upper_value: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// True for errors caused by malformed or unreadable input, as opposed to
    /// well-formed input on which a domain operation is undefined.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Cxt { .. }
                | Error::Json(_)
                | Error::Document(_)
                | Error::InvalidRational(_)
                | Error::Io(_)
                | Error::NotNormalized { .. }
                | Error::UnresolvedLabel { .. }
                | Error::AmbiguousLabel { .. }
                | Error::InvalidMass(_)
        )
    }
}
