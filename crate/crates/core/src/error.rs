use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),

    #[error("vertex set mismatch: {left} vs {right} vertices")]
    VertexSetMismatch { left: usize, right: usize },

    #[error("degree sequences differ")]
    DegreeMismatch,

    #[error("vertex {vertex} has red degree {red} but blue degree {blue}")]
    Unbalanced {
        vertex: VertexId,
        red: usize,
        blue: usize,
    },

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid bone: {0}")]
    InvalidBone(String),

    #[error("bone {a}-{b} has weight {weight} but can hold at most {capacity} edges")]
    CapacityExceeded {
        a: usize,
        b: usize,
        weight: u64,
        capacity: u64,
    },

    #[error("graph is not consistent with the skeleton")]
    NotConsistent,

    #[error("pair {0}-{1} is not a chord")]
    NonChord(VertexId, VertexId),

    #[error("swap is not applicable: {0}")]
    SwapNotApplicable(String),

    #[error("unsupported skeleton shape: {0}")]
    SkeletonShape(String),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NonSymmetricMatrix(usize, usize),

    #[error("matrix is not square")]
    NonSquareMatrix,

    #[error("vertex count for degree {degree} is {numerator}/{degree}, not an integer")]
    NonIntegralCount { degree: usize, numerator: u64 },

    #[error("f({vertex}) = {f} exceeds its degree {degree} in the base graph")]
    FactorExceedsDegree {
        vertex: VertexId,
        f: usize,
        degree: usize,
    },

    #[error("matching is not a perfect matching of the gadget")]
    MatchingNotPerfect,

    #[error("instance exceeds oracle limit: {0}")]
    OracleLimit(String),

    #[error("swap sequence made no progress on a circuit of length {0}")]
    NoProgress(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
