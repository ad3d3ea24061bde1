use thiserror::Error;

use crate::complex::{SimplicialComplex, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("simplex {0:?} is not in the complex")]
    AbsentSimplex(Vec<Vertex>),

    #[error("vertex {0} is not in the complex")]
    AbsentVertex(Vertex),

    #[error("vertex id collision: {0}")]
    IdCollision(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("not a subcomplex of the induced complex: {0}")]
    InvalidSubcomplex(String),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// No witness vertex exists for `(u, a)` although the operation required one.
    #[error("complex is not ample enough: no witness for U = {u:?}")]
    NotAmpleEnough { u: Vec<Vertex>, a: SimplicialComplex },

    #[error("parameter outside the asymptotic regime: {0}")]
    OutOfRegime(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit(_))
    }
}
