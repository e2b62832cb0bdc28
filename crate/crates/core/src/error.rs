use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family specification: {0}")]
    InvalidFamily(String),

    #[error("edge index {index} out of range (graph has {m} edges)")]
    EdgeOutOfRange { index: usize, m: usize },

    #[error("more than {budget} maximal matchings; raise the enumeration budget")]
    BudgetExceeded { budget: usize },

    #[error("graph has {m} edges, exact search is limited to {max_edges}")]
    TooManyEdges { m: usize, max_edges: usize },

    #[error("second factor is not randomly matchable")]
    NotRandomlyMatchable,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: unknown variable `{name}`")]
    UnknownVariable { line: usize, name: String },

    #[error("line {line}: value {value} of `{name}` is not binary")]
    NonBinaryValue {
        line: usize,
        name: String,
        value: f64,
    },
}
