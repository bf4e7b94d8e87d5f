use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// Every variant renders as a one-line diagnostic naming the violated
/// precondition, which the CLI prints verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),

    #[error("face lattice is not graded: {0}")]
    NotGraded(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("point configuration is not full-dimensional (affine dimension {affine} in ambient dimension {ambient})")]
    NotFullDimensional { affine: usize, ambient: usize },

    #[error("point {0} is not a vertex of the hull")]
    NotAVertex(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn out_of_range(msg: impl Into<String>) -> Error {
    Error::OutOfRange(msg.into())
}
