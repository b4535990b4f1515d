use thiserror::Error;

#[derive(Debug, Error)]
pub enum FremderError {
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("dimension mismatch: matrix has dimension {dim}, vector has length {len}")]
    DimensionMismatch { dim: usize, len: usize },
    #[error("matrix does not match the declared structure: {0}")]
    Structure(&'static str),
    #[error("the zero vector is not a valid candidate")]
    ZeroVector,
    #[error("point list must be non-empty")]
    EmptyInput,
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("problem too large for this routine: {0}")]
    Scale(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
