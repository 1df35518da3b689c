use thiserror::Error;

/// A malformed rational literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

/// Errors raised by the library. Each precondition failure has its own kind so
/// callers (and the CLI) can react to it specifically.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc {index} is a self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("arc {index} has negative weight {weight}")]
    NegativeWeight { index: usize, weight: String },
    #[error("arc {index} references vertex {vertex} outside 0..{n}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("dicut side references vertex {vertex} outside 0..{n}")]
    CutOutOfRange { vertex: usize, n: usize },
    #[error("digraph has zero total weight")]
    ZeroWeight,
    #[error("digraph contains a directed cycle")]
    Cyclic,
    #[error("instance has {n} vertices, above the exact-solver cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("coloring is not proper: arc {tail}->{head} joins two vertices of color {color}")]
    ImproperColoring {
        tail: usize,
        head: usize,
        color: usize,
    },
    #[error("side of component {component} is not independent: arc {tail}->{head}")]
    NotIndependent {
        component: usize,
        tail: usize,
        head: usize,
    },
    #[error("vertex {vertex} appears in more than one component side")]
    OverlappingComponents { vertex: usize },
    #[error("arc {index} has weight {weight} below 1")]
    WeightBelowOne { index: usize, weight: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
    #[error("instance format error on line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("internal check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
