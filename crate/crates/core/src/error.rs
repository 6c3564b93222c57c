use thiserror::Error;

use crate::arc::Arc;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid polygon: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arc {0} does not belong to this polygon")]
    ForeignArc(Arc),

    #[error("arcs {0} and {1} cross")]
    Crossing(Arc, Arc),

    #[error("arc {0} is rejected (both endpoints red)")]
    Rejected(Arc),

    #[error("arc {0} is not in the triangulation")]
    NotInTriangulation(Arc),

    #[error("{0} is not a maximal loop")]
    NotALoop(Arc),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("polygon has {0} arcs; at most {max} are supported", max = crate::face::MAX_ARCS)]
    TooManyArcs(usize),

    #[error("order is not a permutation of the maximal faces: {0}")]
    NotAPermutation(String),

    #[error("join embedding is not a bijection onto the maximal faces: {0}")]
    BadEmbedding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
