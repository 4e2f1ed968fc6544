use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("not convolution invertible: {0}")]
    NotConvolutionInvertible(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    /// The input does not describe the structure it claims to (e.g. not a Hopf algebra).
    #[error("structural error: {0}")]
    Structural(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("2-cocycle check failed: {0}")]
    Cocycle(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A structure-constant document violates the schema; `pointer` is a JSON pointer.
    #[error("schema violation at {pointer}: {message}")]
    Schema { pointer: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
