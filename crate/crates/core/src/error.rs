use thiserror::Error;

/// Errors produced by graph construction, spectral computation and the
/// combinatorial solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("vertex {0} listed more than once in subset")]
    DuplicateVertex(usize),
    #[error("subset or function belongs to a different graph")]
    ForeignObject,
    #[error("subset must be non-empty")]
    EmptySubset,
    #[error("subsets must be disjoint (vertex {0} in both)")]
    OverlappingSubsets(usize),
    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(usize),
    #[error("vertex {0} has degree 0; the normalized Laplacian needs every degree >= 1")]
    IsolatedVertex(usize),
    #[error("connected graph required")]
    Disconnected,
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("function length {got} does not match vertex count {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("function value at vertex {0} is not finite")]
    NonFinite(usize),
    #[error("eigensolver did not converge after {iterations} iterations (off-diagonal norm {off_norm:e})")]
    NoConvergence { iterations: usize, off_norm: f64 },
    #[error("{what} refused: {n} vertices exceeds cap of {cap}")]
    SizeCap { what: &'static str, n: usize, cap: usize },
    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("expected chromatic number {expected}, got {got}")]
    ChiMismatch { expected: usize, got: usize },
    #[error("coloring is not equitable with respect to D^-1 A")]
    NotEquitable,
    #[error("function support leaves the selected classes at vertex {0}")]
    SupportViolation(usize),
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("edge sets overlap: {0:?}")]
    SharedEdges(Vec<(usize, usize)>),
    #[error("functions disagree on the glue locus at vertex {0}")]
    GlueMismatch(usize),
    #[error("input is not an eigenpair (residual {residual:e})")]
    NotEigenpair { residual: f64 },
    #[error("structure check failed: {0}")]
    Structure(String),
    #[error("graph is not sharp (gap {gap:e})")]
    NotSharp { gap: f64 },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unrecognized family spec `{0}`")]
    FamilySpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
