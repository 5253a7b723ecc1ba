use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("index {index} out of range for {n} nodes")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("first factor must be regular")]
    NotRegular,
    #[error("graph is not a star")]
    NotStar,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("polynomial of degree {degree} has only {found} real roots")]
    NonRealRoots { degree: usize, found: usize },
    #[error("{msg}, line {line}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
