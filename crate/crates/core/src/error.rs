use thiserror::Error;

use crate::Color;

/// Errors raised by graph construction, flooding, contraction and solving.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("vertex {vertex} has color {color}, but only {color_count} colors are declared")]
    ColorOutOfRange {
        vertex: usize,
        color: Color,
        color_count: usize,
    },
    #[error("graph is disconnected: {reached} of {vertex_count} vertices reachable from vertex 0")]
    DisconnectedGraph { reached: usize, vertex_count: usize },
    #[error("zone {zone} out of range (graph has {zone_count} zones)")]
    InvalidZone { zone: usize, zone_count: usize },
    #[error("cannot contract a single-zone graph")]
    SingletonGraph,
    #[error("operation requires at most 2 colors, instance declares {color_count}")]
    TooManyColors { color_count: usize },
    #[error("flooding vertex {vertex} with color {color} does not change its zone")]
    NoOpMove { vertex: usize, color: Color },
    #[error("move #{index} ({vertex}, {color}) is out of range")]
    MalformedMove {
        index: usize,
        vertex: usize,
        color: Color,
    },
    #[error("adjacent zones {u} and {v} share color {color}")]
    ImproperColoring { u: usize, v: usize, color: Color },
    #[error("adjacency is not symmetric at {u}-{v}")]
    AsymmetricAdjacency { u: usize, v: usize },
    #[error("mismatched lengths: {what}")]
    LengthMismatch { what: &'static str },
    #[error("graph is not bipartite (odd cycle through {u}-{v})")]
    NotBipartite { u: usize, v: usize },
    #[error("instance has {size} vertices, limit for this check is {limit}")]
    InstanceTooLarge { size: usize, limit: usize },
    #[error("requested {requested} extra edges, only {available} vertex pairs are free")]
    TooManyEdges { requested: usize, available: usize },
    #[error("radius certificate violated at step {step}: expected {expected}, found {found}")]
    CertificateViolation {
        step: usize,
        expected: usize,
        found: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
