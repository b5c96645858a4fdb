use thiserror::Error;

use crate::graph::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("graph has {n} vertices; graph6 short form supports at most {max}")]
    UnsupportedSize { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("matching edges share vertex {0}")]
    NotAMatching(usize),
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u64,
        cap: u64,
    },
    #[error("search budget of {0} nodes exhausted before a decision")]
    BudgetExceeded(u64),
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("invalid partition at vertex {vertex}: {reason}")]
    InvalidPartition { vertex: usize, reason: String },
    #[error("no maximal independent set satisfies the weighted cover inequality")]
    KaterinisExhausted,
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("independent routes disagree: {0}")]
    RouteDisagreement(String),
}
