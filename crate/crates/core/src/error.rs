use thiserror::Error;

use crate::graph::{Arc, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: VertexId },

    #[error("self-loop on vertex {0}")]
    SelfLoopArc(VertexId),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("arc ({}, {}) is not in the graph", .0.tail, .0.head)]
    ArcNotInGraph(Arc),

    #[error("input graph is not strongly biconnected")]
    NotStronglyBiconnected,

    #[error("input not 2-vertex-connected")]
    Not2VertexConnected,

    #[error("underlying graph not 3-vertex-connected")]
    Not3VertexConnected,

    #[error("input graph is not 2-vertex strongly biconnected")]
    Not2Vsb,

    #[error("graph has {n} vertices, at least {min} required")]
    TooFewVertices { n: usize, min: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
