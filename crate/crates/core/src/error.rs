use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex id does not belong to the graph it was used with.
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    /// Malformed or otherwise invalid argument.
    #[error("invalid input: {0}")]
    Input(String),

    /// A size limit of this crate would be exceeded.
    #[error("{what}: {requested} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// An operation's precondition does not hold for the given arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// graph6 record could not be decoded.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    /// A search that is guaranteed to succeed did not. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}
