use thiserror::Error;

/// Errors surfaced by the library. The CLI maps each variant to an exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A hypothesis or precondition on a numeric parameter does not hold.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("vertex {vertex} is not in block {block}")]
    NotInBlock { vertex: usize, block: usize },

    #[error("block index {index} out of range ({count} blocks)")]
    NoSuchBlock { index: usize, count: usize },

    #[error("vertex {0} must not belong to the target set")]
    VertexInTargetSet(usize),

    #[error("input of size {size} exceeds the limit {limit} for {what}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("feasible set is empty")]
    EmptyFeasibleSet,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
