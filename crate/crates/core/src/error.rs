use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("negative capacity {value} at vertex {vertex}")]
    NegativeCapacity { vertex: usize, value: i64 },
    #[error("vertex function has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("instance with {n} vertices exceeds the size limit {limit}")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("threshold {value} at vertex {vertex} lies outside 0..={degree}")]
    ThresholdOutOfRange { vertex: usize, value: i64, degree: usize },
    #[error("budget {budget} exceeds the total capacity {capacity}")]
    BudgetInfeasible { budget: i64, capacity: i64 },
    #[error("budget must be non-negative, got {0}")]
    NegativeBudget(i64),
    #[error("total {total} outside 0..={max}")]
    TotalOutOfRange { total: i64, max: i64 },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("budget {budget} outside {min}..={max}")]
    BudgetOutOfRange { budget: i64, min: i64, max: i64 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
