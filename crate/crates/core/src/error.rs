use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid vertex name {0:?}")]
    InvalidName(String),

    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),

    #[error("self-loop at {0:?}")]
    SelfLoop(String),

    #[error("duplicate edge {0:?} -- {1:?}")]
    DuplicateEdge(String, String),

    #[error("graph with {0} vertices exceeds the distance table capacity")]
    TooLarge(usize),

    #[error("{0:?} and {1:?} lie in different components")]
    Disconnected(String, String),

    #[error("graph is not median: {0}")]
    NotMedian(String),

    #[error("vertex set is not convex: {0}")]
    NotConvex(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("improper colouring: {0:?} and {1:?} share colour {2}")]
    ImproperColoring(String, String, usize),

    #[error("{0}")]
    Precondition(String),

    #[error("step budget of {budget} exhausted with {remaining} co-bagged non-edges left")]
    BudgetExceeded { budget: usize, remaining: usize },

    #[error("{oracle}: graph has {n} vertices, bound is {bound}")]
    BoundExceeded {
        oracle: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("separations {0} and {1} cross")]
    Crossing(usize, usize),

    #[error("invalid bramble: {0}")]
    InvalidBramble(String),

    #[error("malformed document: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
