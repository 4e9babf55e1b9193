use thiserror::Error;

use crate::edge::Edge;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field size {0} is not a prime")]
    NotPrime(u32),
    #[error("vertex count {0} is outside the supported range 2..=16")]
    UnsupportedVertexCount(usize),
    #[error("invalid edge ({k},{l}) for {f} vertices")]
    InvalidEdge { k: usize, l: usize, f: usize },
    #[error("edge index {index} is out of range for {f} vertices")]
    InvalidEdgeIndex { index: usize, f: usize },
    #[error("vertex {vertex} is out of range for {f} vertices")]
    InvalidVertex { vertex: usize, f: usize },
    #[error("enumerating {q}^{f} message assignments exceeds the 2^34 guard")]
    EnumerationTooLarge { q: u32, f: usize },
    #[error("edge {0} is already part of the conditioning set")]
    EdgeAlreadyConditioned(Edge),
    #[error("edge {0} is already present in the graph")]
    EdgePresent(Edge),
    #[error("edge {0} appears more than once")]
    DuplicateEdge(Edge),
    #[error("prefix must contain at least one edge")]
    EmptyPrefix,
    #[error("order is not a permutation of the {expected} edges of K_{f}")]
    NotAPermutation { f: usize, expected: usize },
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("graph is already complete")]
    GraphComplete,
    #[error("construction requires {expected} vertex count, got {f}")]
    ParityError { f: usize, expected: &'static str },
    #[error("invalid color permutation: {0}")]
    InvalidPermutation(String),
    #[error("search needs {required} evaluations, above the cap of {cap}")]
    InfeasibleBudget { required: u128, cap: u128 },
    #[error("search space for f = {f} exceeds the guard (f <= {limit})")]
    SearchSpaceTooLarge { f: usize, limit: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// Errors raised by size or feasibility guards rather than malformed input.
    pub fn is_guard_violation(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::UnsupportedVertexCount(_)
                | Error::EnumerationTooLarge { .. }
                | Error::InfeasibleBudget { .. }
                | Error::SearchSpaceTooLarge { .. }
        )
    }
}
