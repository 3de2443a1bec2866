use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable sets differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("series mismatch: {0}")]
    SeriesMismatch(String),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("division by a non-constant or zero expression at offset {offset}")]
    Division { offset: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("degree bound exceeded: needed {needed}, table covers {available}")]
    DegreeBound { needed: u32, available: u32 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("schema error in {path}: {message}")]
    Schema { path: String, message: String },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}
