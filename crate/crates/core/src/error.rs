use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has a single vertex")]
    TrivialGraph,
    #[error("graph is complete")]
    CompleteGraph,
    #[error("vertex sequence is not a path: {0}")]
    NotAPath(String),
    #[error("coloring does not match graph: {0}")]
    ColoringMismatch(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("argument must be positive")]
    NonPositive,
    #[error("search budget exhausted; cfc lies in [{lower}, {upper}]")]
    BudgetExhausted { lower: usize, upper: usize },
    #[error("no conflict-free connection coloring with at most {0} colors")]
    NoColoringWithinMax(usize),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("no connected sample after {0} retries")]
    RetriesExhausted(usize),
    #[error("graph too large for the exhaustive oracle ({edges} edges) and the constructive route does not apply")]
    OracleInfeasible { edges: usize },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
