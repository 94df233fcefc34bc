use thiserror::Error;

use crate::label::EdgeWitness;
use crate::simplicial::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),

    #[error("degenerate simplex {0:?}")]
    DegenerateSimplex(Vec<VertexId>),

    #[error("face {face:?} lies in {count} maximal simplices")]
    NotPseudoManifold { face: Vec<VertexId>, count: usize },

    #[error("point lies outside the ambient simplex")]
    OutsideSimplex,

    #[error("invalid dimension {0}")]
    InvalidDimension(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a boundary complex of the cross-polytope: {0}")]
    NotCrossPolytopeBoundary(String),

    #[error("boundary is not antipodally symmetric")]
    AsymmetricBoundary,

    #[error("vertex {0} has no label")]
    MissingLabel(VertexId),

    #[error("vertex {vertex} carries label {label}, outside the admissible range")]
    InvalidLabel { vertex: VertexId, label: i32 },

    #[error("map is not odd at boundary vertex {0}")]
    NotOdd(VertexId),

    #[error("map vanishes at vertex {0}")]
    ZeroMapValue(VertexId),

    #[error("boundary edge {0:?} is complementary; the induced boundary map is not simplicial into the cone complex")]
    NotSimplicial(EdgeWitness),

    #[error("boundary complex is not a single cycle")]
    NotACycle,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
