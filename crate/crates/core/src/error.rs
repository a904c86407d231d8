use thiserror::Error;

/// Errors produced by the pebbling engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PebbleError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge between vertices {0} and {1}")]
    ParallelEdge(usize, usize),
    #[error("vertex index {index} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { index: usize, vertex_count: usize },
    #[error("negative pebble count {count} at vertex {vertex} in a non-extended configuration")]
    NegativeCount { vertex: usize, count: i64 },
    #[error("negative demand {count} at vertex {vertex}")]
    NegativeDemand { vertex: usize, count: i64 },
    #[error("move list uses non-edge ({from}, {to})")]
    EdgeViolation { from: usize, to: usize },
    #[error("dimension mismatch: expected {expected} vertices, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("search budget of {cap} nodes exceeded")]
    BudgetExceeded { cap: u64 },
    #[error("move list does not solve the configuration")]
    NotASolution,
    #[error("vertex {0} does not have degree 1")]
    NotALeaf(usize),
    #[error("cannot remove the only vertex of a graph")]
    SingletonGraph,
    #[error("graph is not a tree")]
    NotATree,
    #[error("demand is identically zero")]
    ZeroDemand,
    #[error("malformed exact-cover instance: {0}")]
    MalformedInstance(String),
    #[error("selected sets do not form an exact cover")]
    NotACover,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = PebbleError> = std::result::Result<T, E>;
