use thiserror::Error;

/// Errors raised across the library.
///
/// Budget exhaustion is kept apart from genuine infeasibility so callers can
/// fall back to a heuristic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate pair {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("multiplicity must be at least 1 (pair {0}-{1})")]
    ZeroMultiplicity(usize, usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed interval representation: {0}")]
    MalformedRep(String),
    #[error("invalid composition scheme: {0}")]
    InvalidScheme(String),
    #[error("unknown instance name `{0}`")]
    UnknownInstance(String),
    #[error("graph contains a claw centred at {center} with leaves {leaves:?}")]
    ClawPresent { center: usize, leaves: [usize; 3] },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search budget exceeded ({0})")]
    BudgetExceeded(String),
    #[error("vertex {0} is uncoloured")]
    PartialColoring(usize),
    #[error("no free colour for vertex {vertex} within a palette of {palette}")]
    NoFreeColor { vertex: usize, palette: usize },
    #[error("recolouring count violated at vertex {vertex}: {available} available, need {required}")]
    RecolorCount {
        vertex: usize,
        available: usize,
        required: usize,
    },
    /// The structure guaranteed a vertex and the scan found none. The
    /// offending instance is attached in graph file format.
    #[error("exhaustive selector scan found no witness; instance:\n{instance}")]
    ScanFailed { instance: String },
}

pub type Result<T> = std::result::Result<T, Error>;
