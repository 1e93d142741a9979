use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph would have {requested} vertices, capacity is {max}")]
    Capacity { requested: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set {bits:#06x} is not contained in a graph on {n} vertices")]
    SetOutOfRange { bits: u16, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0} is not an edge of the graph")]
    MissingEdge(crate::Edge),
    #[error("edges {0} and {1} share a vertex")]
    OverlappingEdges(crate::Edge, crate::Edge),
    #[error("vertex set is not stable")]
    NotStable,
    #[error("vertex set is not a local maximum stable set")]
    NotPsiMember,
    #[error("graph is not very well-covered")]
    NotVeryWellCovered,
    #[error("matching is not perfect")]
    NotPerfect,
    #[error("matching is not maximum")]
    NotMaximum,
    #[error("local maximum stable sets do not form a greedoid")]
    NotGreedoid,
    #[error("chain vertex {0} does not add exactly one new neighbor")]
    ChainDefect(usize),
    #[error("vertex {0} already belongs to the set")]
    AlreadyMember(usize),
    #[error("{family} needs at least {min} vertices, got {n}")]
    TooSmall { family: &'static str, min: usize, n: usize },
    #[error("corona needs one attached graph per base vertex (base has {base}, got {attached})")]
    CoronaArity { base: usize, attached: usize },
    #[error("corona attached graphs must be non-empty")]
    EmptyCoronaPart,
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Edge-list parse failures. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing vertex-count line")]
    MissingHeader,
    #[error("line {line}: expected a vertex count, found {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: {n} vertices exceeds capacity {max}")]
    Capacity { line: usize, n: usize, max: usize },
    #[error("line {line}: expected \"u v\", found {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: expected {n} labels, found {found}")]
    LabelCount { line: usize, n: usize, found: usize },
}
