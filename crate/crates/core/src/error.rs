use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ragged block grid: {0}")]
    RaggedBlocks(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("the zero vector is not a valid pencil parameter")]
    ZeroAlpha,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("rejected: {0}")]
    Rejected(String),
    #[error("certificate failure: {0}")]
    Certificate(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}
