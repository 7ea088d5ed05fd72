use thiserror::Error;

/// Problems found while reading a PD code or braid word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error in crossing {index}: {message}")]
    Syntax { index: usize, message: String },
    #[error("edge label {label} occurs {count} time(s), expected 2 (first seen in crossing {crossing})")]
    Label { label: u32, count: usize, crossing: usize },
    #[error("inconsistent strand orientation at crossing {crossing}")]
    Orientation { crossing: usize },
    #[error("braid generator at position {position} has index {index}, expected |index| >= 1")]
    BraidIndex { position: usize, index: i64 },
    #[error("braid generator at position {position} exceeds the strand count {strands}")]
    BraidStrands { position: usize, strands: usize },
    #[error("state bitstring has length {got}, diagram has {expected} crossings")]
    StateLength { got: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("diagram is disconnected; this operation requires a connected projection")]
    DisconnectedDiagram,
    #[error("ribbon graph is disconnected")]
    DisconnectedGraph,
    #[error("unknown edge {0}")]
    UnknownEdge(u32),
    #[error("edge {0} is a loop and cannot be contracted")]
    LoopContraction(u32),
    #[error("invalid rotation system: {0}")]
    InvalidRibbonGraph(String),
    #[error("invalid edge order: {0}")]
    InvalidEdgeOrder(String),
    #[error("{crossings} crossings exceed the state-sum cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },
    #[error("one-vertex base case with {edges} loops exceeds the cap of {cap}")]
    BaseCaseTooLarge { edges: usize, cap: usize },
    #[error("{edges} edges exceed the subgraph-expansion cap of {cap}")]
    TooManyEdges { edges: usize, cap: usize },
    #[error("monomial Y^{y} Z^{z} has y < 2z; not a ribbon-graph polynomial")]
    NegativeDeltaExponent { y: u32, z: u32 },
    #[error("postcondition failed: {0}")]
    Postcondition(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::InvalidRibbonGraph(_) | Error::InvalidEdgeOrder(_) => 1,
            Error::Postcondition(_) => 3,
            _ => 2,
        }
    }
}
