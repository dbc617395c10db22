use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("expected {expected} vertex colors, found {found}")]
    ColorCount { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("source and target coincide (vertex {0})")]
    SameTerminals(Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("family is not uniform: sets of size {first} and {other}")]
    NonUniform { first: usize, other: usize },
    #[error("sequence family mixes lengths {first} and {other}")]
    MixedLengths { first: usize, other: usize },
    #[error("sequence {0} is not locally rainbow")]
    NotRainbow(String),
    #[error("element {element} outside universe of size {universe}")]
    OutOfUniverse { element: usize, universe: usize },
    #[error("exhaustive backend would enumerate {0} obstruction sets")]
    TooManyObstructions(u128),
    #[error("algebraic backend needs rank {0}, above the supported 63")]
    RankTooLarge(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Representative(#[from] RepError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("any-length cap {cap} exceeds the ceiling {ceiling}; use the product backend")]
    CapExceeded { cap: u128, ceiling: u128 },
    #[error("product state space {states} exceeds the ceiling {ceiling}")]
    StateCeiling { states: u128, ceiling: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported query: {0}")]
    Unsupported(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("variable x{var} occurs {positive} times positive and {negative} times negative (need 2 and 2)")]
    Occurrences {
        var: usize,
        positive: usize,
        negative: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
