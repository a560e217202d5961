use thiserror::Error;

use crate::ordering::WindowFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("edge index {index} out of range for a graph with {num_edges} edges")]
    EdgeOutOfRange { index: usize, num_edges: usize },

    #[error("vertex {vertex} out of range 1..={num_vertices}")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("density is undefined for a graph with a single vertex")]
    UndefinedDensity,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("input ordering is not a cyclic base ordering: {0}")]
    NotACbo(WindowFailure),

    /// A construction produced an ordering that the verifier rejects.
    #[error("{construction} does not yield a cyclic base ordering: {failure}")]
    ClaimViolation {
        construction: String,
        failure: WindowFailure,
    },

    #[error("graph with {0} vertices is too large for subset enumeration (limit 64)")]
    TooLarge(usize),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("malformed family spec `{spec}`: {reason}")]
    FamilySpec { spec: String, reason: String },

    #[error("format error: {0}")]
    Format(String),
}
