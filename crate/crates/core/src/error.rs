use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("surd (A={a}, B={b}) is outside the 128-bit comparison envelope")]
    Overflow { a: u128, b: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {n} exceeds the limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("invalid graph6 line: {0}")]
    Graph6(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GarlicError {
    #[error("p + q must be at least 1 (got p={p}, q={q})")]
    EmptyParams { p: u64, q: u64 },
    #[error("{op} requires {requirement} (got p={p}, q={q})")]
    Precondition {
        op: &'static str,
        requirement: &'static str,
        p: u64,
        q: u64,
    },
    #[error("({a}, {b}, {c}) is not a Pythagorean triplet")]
    NotATriplet { a: u64, b: u64, c: u64 },
    #[error("perimeter LCM overflows at prime {prime}")]
    LcmOverflow { prime: u64 },
    #[error("{0}")]
    Limit(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
