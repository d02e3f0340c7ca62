use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("expected {expected} vertex labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("graph on {0} vertices is too large for graph6")]
    TooLarge(usize),
}

/// Failure to read one of the text interchange formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6: {message} at byte {offset}")]
    Graph6 { offset: usize, message: String },
    #[error("edge list: {message} on line {line}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("{family} takes {expected} parameter(s), got {got}")]
    Arity {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{family}: {message}")]
    OutOfDomain {
        family: &'static str,
        message: String,
    },
    #[error("malformed family spec '{0}': expected name:p1[,p2]")]
    Syntax(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("{solver} refuses {what} = {actual} (guard: at most {limit})")]
    Guard {
        solver: &'static str,
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClaimError {
    #[error("unknown claim id '{0}'")]
    UnknownClaim(String),
    #[error("claim {id}: {message}")]
    Registry { id: String, message: String },
    #[error("formula '{formula}': {message}")]
    Formula { formula: String, message: String },
    #[error("golden file: {0}")]
    Golden(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}
