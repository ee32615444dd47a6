use thiserror::Error;

use crate::graph::Vertex;
use crate::ordering::NonChordalCertificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("ordering is not a permutation of 0..{n}")]
    NotPermutation { n: usize },
    #[error("ordering is not a perfect elimination ordering")]
    NotPeo,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("not co-chordal: {0}")]
    NotCoChordal(NonChordalCertificate),
    #[error("malformed clique tree: {0}")]
    MalformedCliqueTree(String),
    #[error("sides do not form a biclique subgraph of the graph")]
    NotABiclique,
    #[error("biclique {part} has an empty side")]
    EmptySide { part: usize },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("graph has {m} edges, exceeding the oracle cap of {cap}")]
    EdgeCapExceeded { m: usize, cap: usize },
    #[error("oracle budget of {budget} expansions exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("clique number unavailable: complement not chordal and {n} vertices exceed the brute-force limit")]
    OmegaUnavailable { n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
