use thiserror::Error;

/// What went wrong on a particular line of a graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    LoopEdge(usize),
    VertexOutOfRange { vertex: usize, n: usize },
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::LoopEdge(v) => write!(f, "loop edge at vertex {v}"),
            ParseErrorKind::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} does not exist")]
    InvalidVertex(usize),
    #[error("edge {0} does not exist")]
    InvalidEdge(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    DegreeNotTwo { vertex: usize, degree: usize },
    #[error("both edges at vertex {0} lead to the same neighbour")]
    NeighboursNotDistinct(usize),
    #[error("vertex {0} is not a cut vertex")]
    NotACutVertex(usize),
    #[error("vertex {vertex} is not an endpoint of edge {edge}")]
    NotAnEndpoint { vertex: usize, edge: usize },
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("({vertex}, {edge}) is not a vertex-edge separator")]
    NotASeparator { vertex: usize, edge: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("edges {0} and {1} do not form a 2-cut")]
    NotATwoCut(usize, usize),
    #[error("edges {0} and {1} share an endpoint")]
    SharedEndpoint(usize, usize),
    #[error("vertex {0} has odd degree")]
    OddDegree(usize),
    #[error("not Eulerian")]
    NotEulerian,
    #[error("component {component} has {edges} edges, limit is {limit}")]
    ComponentTooLarge {
        component: usize,
        edges: usize,
        limit: usize,
    },
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("graph is not in class H")]
    NotClassH,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("invalid cycle decomposition: {0}")]
    InvalidDecomposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
