use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("polynomial is not symmetric in x and y")]
    NotSymmetric,
    #[error("non-finite intermediate in floating-point evaluation")]
    Overflow,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {edges} edges, above the bound of {bound}")]
    TooLarge { edges: usize, bound: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parameter out of range: {0}")]
    InvalidRange(String),
    #[error("point lies on the real axis")]
    RealAxis,
    #[error("partition function vanishes at this point")]
    ZeroOfPartition,
    #[error("no unique dominant eigenvalue at this point")]
    NoUniqueDominant,
    #[error("root finder did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
