use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {p} vertices")]
    VertexOutOfRange { vertex: usize, p: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {0} has no label")]
    MissingVertexLabel(usize),
    #[error("labeling has {labels} entries but the graph has {p} vertices")]
    ExtraVertexLabels { labels: usize, p: usize },
    #[error("bound {bound} is smaller than the largest label {max}")]
    BoundTooSmall { bound: u32, max: u32 },
    #[error("transformation maps vertex {vertex} to the negative label {value}")]
    NegativeLabelProduced { vertex: usize, value: i64 },
    #[error("a star needs at least one edge")]
    EmptyStar,
    #[error("the second all-positive star labeling needs m >= 2, got m = {0}")]
    MTooSmall(usize),
    #[error("complementation is only an equivalence when n = 0 (graph has n = {0})")]
    ComplementationWithNegativeEdges(usize),
    #[error("invalid search budget: {0}")]
    InvalidBudget(&'static str),
    #[error("search aborted after {nodes} nodes: budget exhausted")]
    SearchAborted { nodes: u64 },
    #[error("orbits do not partition the {p} vertices")]
    InvalidOrbits { p: usize },
}
