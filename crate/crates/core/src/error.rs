use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partitions have unequal weight: {left} vs {right}")]
    UnequalWeight { left: usize, right: usize },

    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("cover relations contain a cycle through elements {0} and {1}")]
    CycleDetected(usize, usize),

    #[error("vertex {vertex} out of range for size {size}")]
    VertexOutOfRange { vertex: usize, size: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("{size} vertices exceed the bitmask limit of 64")]
    TooManyVertices { size: usize },

    #[error("vertices {0} and {1} are non-adjacent but incomparable in the chosen order")]
    OrderIncompatible(usize, usize),

    #[error("order has {order} elements but graph has {graph} vertices")]
    OrderSizeMismatch { order: usize, graph: usize },

    #[error("shape of size {shape} does not match {vertices} vertices")]
    SizeMismatch { shape: usize, vertices: usize },

    #[error("tail sequence has no ascent; the involution is undefined")]
    NoAscent,

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("bad shape: {0}")]
    BadShape(String),

    #[error("complete multipartite graphs with fewer than two parts are not classified")]
    LengthOne,

    #[error("K_{0} is Schur-positive; no witness exists")]
    IsPositive(Partition),

    #[error("K_{0} is nice; no dominated type without a stable partition exists")]
    NoWitness(Partition),

    #[error("the graph is not presented as an incomparability graph")]
    NotIncomparability,

    #[error("graph has no stable partition of type {0}")]
    MissingStablePartition(Partition),

    #[error("vertex {0} appears twice in the sequence")]
    RepeatedVertex(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
