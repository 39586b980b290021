use thiserror::Error;

/// Reason a line of an edge-list file was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing vertex count")]
    MissingVertexCount,
    #[error("malformed line: {0:?}")]
    Malformed(String),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex set must be a nonempty proper subset of the vertices")]
    TrivialVertexSet,

    #[error("vertex set belongs to a graph on {expected} vertices, got {actual}")]
    VertexSetMismatch { expected: usize, actual: usize },

    #[error("vector has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("graph has {n} vertices, above the exact-enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("graph needs at least {required} vertices, has {n}")]
    TooSmall { n: usize, required: usize },

    #[error("not a tree")]
    NotATree,

    #[error("edge {0} {1} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("matrix is not symmetric (|a[{i}][{j}] - a[{j}][{i}]| = {diff:e})")]
    NotSymmetric { i: usize, j: usize, diff: f64 },

    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("Fiedler vector is numerically zero")]
    DegenerateFiedler,

    #[error("linear program: {0}")]
    Lp(String),

    #[error("LP({k}) failed: {reason}")]
    LinfSubproblem { k: usize, reason: String },

    #[error(
        "random geometric graph stayed disconnected after {attempts} seeds starting at {seed}"
    )]
    RetriesExhausted { seed: u64, attempts: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
