use std::fmt;

/// Why an edge list failed to describe a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotATreeReason {
    Cycle,
    Disconnected,
    SelfLoop,
    DuplicateEdge,
    BadVertexId,
}

impl fmt::Display for NotATreeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NotATreeReason::Cycle => "cycle",
            NotATreeReason::Disconnected => "disconnected",
            NotATreeReason::SelfLoop => "self-loop",
            NotATreeReason::DuplicateEdge => "duplicate-edge",
            NotATreeReason::BadVertexId => "bad-vertex-id",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(NotATreeReason),
    #[error("not a simple graph: {0}")]
    NotSimple(NotATreeReason),
    #[error("input is not a forest")]
    NotAForest,
    #[error("vertex {0} is out of range")]
    BadVertex(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("degree cap {cap} cannot join {components} components into a tree")]
    CapInfeasible { cap: usize, components: usize },
    #[error("sequence must be nonempty")]
    EmptySequence,
    #[error("degree sequence entries must be positive (entry {0} is zero)")]
    ZeroEntry(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("coloring does not assign a valid color to vertex {0}")]
    PartialColoring(usize),
    #[error("search space too large: {0}")]
    TooLarge(String),
    #[error("maximum degree {max_degree} exceeds n/{k} for n = {n}")]
    DegreeTooHigh { max_degree: usize, n: usize, k: usize },
    #[error("constraint vertices {0} and {1} are not two distinct pre-leaves")]
    NoTwoPreLeaves(usize, usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("could not find {needed} pairwise non-adjacent vertices of degree at most 2 (found {found})")]
    IndependentSetNotFound { needed: usize, found: usize },
    #[error("Prüfer entry {entry} is outside 1..={n}")]
    BadEntry { entry: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    /// A constructive step reached a state its own case analysis rules out.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by a broken
    /// invariant inside the library.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
