use thiserror::Error;

/// Errors raised by graph, space, and partition operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex label {0:?}: labels must be nonempty and contain no whitespace")]
    InvalidLabel(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("loop edge at {0}")]
    LoopEdge(String),
    #[error("edge endpoint {0} is not a vertex")]
    UnknownEndpoint(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertex subset is empty")]
    EmptySet,
    #[error("vertex {0} is not in the host graph")]
    NotSubset(String),
    #[error("graph list is empty")]
    EmptyList,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("path endpoints coincide at {0}")]
    EqualEndpoints(String),
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("parts overlap at {0}")]
    PartsOverlap(String),
    #[error("parts do not cover the vertex set: {0}")]
    PartsNotCovering(String),
    #[error("vertex {vertex} is not in part {part}")]
    WrongSide { vertex: String, part: char },

    #[error("distance matrix is not square: {0}")]
    NotSquare(String),
    #[error("asymmetric entry at ({0}, {1})")]
    AsymmetricEntry(usize, usize),
    #[error("nonzero diagonal entry at ({0}, {0})")]
    NonzeroDiagonal(usize),
    #[error("zero distance between distinct points at ({0}, {1})")]
    ZeroOffDiagonal(usize, usize),
    #[error("negative distance at ({0}, {1})")]
    NegativeEntry(usize, usize),
    #[error("space is not ultrametric")]
    NotUltrametric,
    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("graph vertices do not match the points of the space")]
    VertexMismatch,
    #[error("graph is not bipartite with the given parts: edge {{{0}, {1}}} lies inside one part")]
    NotBipartiteWithParts(String, String),
    #[error("graph is not path-bipartite for the given parts")]
    NotPathBipartite,
    #[error("graph is not proximinal for the given parts and space")]
    NotAProximinalGraph,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange {
        what: &'static str,
        value: String,
        allowed: String,
    },
    #[error("instance too large: {0}")]
    SizeExceeded(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
