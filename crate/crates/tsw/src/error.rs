use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("instance is infeasible")]
    Infeasible,
    #[error("state budget exceeded ({0} states explored)")]
    StateBudgetExceeded(usize),
    #[error("node budget exceeded ({0} nodes expanded)")]
    NodeBudgetExceeded(u64),
    #[error("target enumeration limited to n <= {cap}, instance has n = {n}")]
    EnumCapExceeded { n: usize, cap: usize },
    #[error("unsupported graph shape: {0}")]
    UnsupportedShape(String),
    #[error("invalid generator input: {0}")]
    InvalidGeneratorInput(String),
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
