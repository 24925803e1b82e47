use crate::decomposition::DecompositionViolation;
use crate::model::ModelViolation;
use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("vertex {vertex} is out of range (graph has {len} vertices)")]
    VertexOutOfRange { vertex: usize, len: usize },

    #[error("vertex {vertex} is unreachable from vertex {from}")]
    Unreachable { from: usize, vertex: usize },

    #[error("vertex {vertex} appears in more than one part")]
    OverlappingParts { vertex: usize },

    #[error("part {part} does not induce a connected subgraph")]
    DisconnectedPart { part: usize },

    #[error("invalid minor model: {}", format_list(.0))]
    InvalidModel(Vec<ModelViolation>),

    #[error("invalid decomposition: {}", format_list(.0))]
    InvalidDecomposition(Vec<DecompositionViolation>),

    #[error("host graph is not the expected {rows}x{cols} grid")]
    NotAGrid { rows: usize, cols: usize },

    #[error("{value} is not divisible by {divisor}")]
    NotDivisible { value: usize, divisor: usize },

    #[error(
        "grid model is {got_rows}x{got_cols} but at least {need_rows}x{need_cols} is required"
    )]
    DimensionTooSmall {
        need_rows: usize,
        need_cols: usize,
        got_rows: usize,
        got_cols: usize,
    },

    #[error(
        "distance from the centre to {witness} is {distance}, exceeding the radius bound {bound}"
    )]
    RadiusExceeded {
        witness: String,
        distance: usize,
        bound: usize,
    },

    #[error("no verified certificate found within {trials} trials")]
    TrialsExhausted { trials: u32 },

    #[error("the guarantee for these dimensions is zero; nothing to extract")]
    GuaranteeZero,

    #[error("missing anchor for pattern vertex {vertex}")]
    MissingAnchor { vertex: usize },

    #[error("vertex {vertex} has out-degree {degree}, exceeding the cap {cap}")]
    OutDegreeExceeded {
        vertex: usize,
        degree: usize,
        cap: usize,
    },

    #[error("{what} has size {size}, exceeding the limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("internal defect: {0}")]
    Defect(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

fn format_list<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
