use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("graph is disconnected: no path between {0} and {1}")]
    Disconnected(usize, usize),

    #[error("vertex {0} is not in the given component")]
    RootOutsideComponent(usize),

    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("{what} limit exceeded: {actual} > {limit}")]
    LimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("vertex set is not a valid {0}")]
    NotDominating(String),

    #[error("induced subgraph on the given vertex set is disconnected")]
    InducedDisconnected,

    #[error("minimum degree {actual} is below the required {required}")]
    MinDegree { actual: usize, required: usize },

    #[error("interval graph is disconnected after interval {0}")]
    IntervalGap(usize),

    #[error("coloring does not cover edge ({0}, {1})")]
    UncoveredEdge(usize, usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// The stage-2 dispatcher reached a state the case analysis rules out.
    #[error("coloring construction diagnostic at vertex {vertex}: {detail}")]
    Diagnostic { vertex: usize, detail: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
