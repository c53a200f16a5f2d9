use thiserror::Error;

/// Errors raised by map constructions, surgery, the bijection and the
/// enumeration/sampling front ends.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation of 1..={size}: {reason}")]
    NotPermutation { size: usize, reason: String },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("alpha is not a fixed-point-free involution (half-edge {0})")]
    NotInvolution(u32),
    #[error("map is not connected")]
    NotConnected,
    #[error("map is not unicellular ({faces} faces)")]
    NotUnicellular { faces: usize },
    #[error("map is not in canonical form (gamma != (1,2,...,2n))")]
    NotCanonical,
    #[error("half-edge {0} out of range")]
    HalfEdgeOutOfRange(u32),
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("half-edge {half_edge} is not incident to vertex {vertex}")]
    HalfEdgeNotOnVertex { half_edge: u32, vertex: u32 },
    #[error("empty cut set")]
    EmptyCutSet,
    #[error("half-edges {0} and {1} lie on the same vertex")]
    SameVertex(u32, u32),
    #[error("half-edge {0} appears twice")]
    DuplicateHalfEdge(u32),
    #[error("gluing needs at least two half-edges, got {0}")]
    GlueTooShort(usize),
    #[error("genus-0 map has no core")]
    GenusZero,
    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),
    #[error("map is not dominant")]
    NotDominant,
    #[error("vertex {0} is not an intertwined node")]
    NotIntertwined(u32),
    #[error("invalid opening sequence: {0}")]
    InvalidSequence(String),
    #[error("skeleton needs at least two marked vertices, got {0}")]
    TooFewMarks(usize),
    #[error("marked vertex set is singular")]
    Singular,
    #[error("invalid triples: {0}")]
    InvalidTriples(String),
    #[error("vertex {0} has no label")]
    MissingLabel(u32),
    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),
    #[error("triple {0} does not carry equal labels")]
    UnequalTripleLabels(usize),
    #[error("series order {requested} exceeds bound {bound}")]
    OrderTooLarge { requested: usize, bound: usize },
    #[error("genus {g} out of range for n = {n}")]
    GenusOutOfRange { g: u32, n: u32 },
    #[error("resource budget of {0} visited objects exceeded")]
    ResourceBound(u64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("class is empty for g = {g}, n = {n}")]
    EmptyClass { g: u32, n: u32 },
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
