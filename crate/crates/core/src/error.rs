use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("quiver has an oriented cycle")]
    Cycle,
    #[error("vector has {got} entries but the quiver has {want} vertices")]
    LengthMismatch { got: usize, want: usize },
    #[error("entry at position {0} is negative; a dimension vector must be non-negative")]
    NegativeEntry(usize),
    #[error("the zero vector is not allowed here")]
    ZeroVector,
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("generators are linearly dependent: {0}")]
    DependentGenerators(String),
    #[error("invalid exceptional collection: {0}")]
    InvalidCollection(String),
    #[error("invalid root: {0}")]
    InvalidRoot(String),
    #[error("input is unstable: {0}")]
    Unstable(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("unsupported field size {0} (supported: 2, 3, 5)")]
    BadField(u64),
    #[error("representations live over different fields")]
    FieldMismatch,
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
