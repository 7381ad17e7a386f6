//! Crate-wide error type.
//!
//! Every fallible operation in this crate reports one of these variants.
//! Resource-bound refusals are kept separate from ordinary input errors so
//! callers (the CLI in particular) can distinguish "your input is wrong"
//! from "this input is too large for an exhaustive search".

use std::fmt;

use thiserror::Error;

/// How an algebra fails to come from a simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SGraphicabilityViolation {
    /// An entry is neither 0 nor 1. Row/column are 1-based.
    NonBinary { row: usize, col: usize, value: String },
    /// `a_ij != a_ji` for some `i != j`.
    Asymmetric { i: usize, j: usize },
    /// A diagonal entry is nonzero (the associated graph would need a loop).
    NonzeroDiagonal { i: usize },
}

impl fmt::Display for SGraphicabilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonBinary { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is not 0 or 1")
            }
            Self::Asymmetric { i, j } => {
                write!(f, "entries ({i},{j}) and ({j},{i}) differ")
            }
            Self::NonzeroDiagonal { i } => write!(f, "diagonal entry ({i},{i}) is nonzero"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be positive")]
    ZeroVertices,
    #[error("loop edge {{{0},{0}}} is not allowed in a simple graph")]
    LoopEdge(usize),
    #[error("edge {{{u},{v}}} has an endpoint outside 1..={n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("arc ({u},{v}) has an endpoint outside 1..={n}")]
    ArcOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate arc ({u},{v})")]
    DuplicateArc { u: usize, v: usize },
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("generator map image {image} repeats; images must be pairwise distinct")]
    MapNotInjective { image: usize },
    #[error("generator map image {image} out of range 1..={n}")]
    MapImageOutOfRange { image: usize, n: usize },
    #[error("generator map covers {have} vertices, expected {want}")]
    MapSizeMismatch { have: usize, want: usize },
    #[error("path endpoints must differ (both are {0})")]
    EqualEndpoints(usize),

    #[error("structure matrix must have positive dimension")]
    EmptyMatrix,
    #[error("structure matrix must be square: row {row} has {len} entries, expected {dim}")]
    NonSquareMatrix { row: usize, len: usize, dim: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range 1..={dim}")]
    GeneratorOutOfRange { index: usize, dim: usize },
    #[error("algebra is not graphicable: entry ({row},{col}) = {value} is not 0 or 1")]
    NotGraphicable { row: usize, col: usize, value: String },
    #[error("algebra is not S-graphicable: {0}")]
    NotSGraphicable(SGraphicabilityViolation),

    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("cannot parse '{token}' in family spec '{spec}'")]
    BadFamilyToken { spec: String, token: String },
    #[error("invalid parameters for {family}: {reason}")]
    InvalidFamilyParameters { family: &'static str, reason: String },
    #[error("chain index must be at least 2 (got {0})")]
    ChainIndexTooSmall(usize),

    #[error("{operation}: size {actual} exceeds the supported bound of {limit} {unit}")]
    ResourceBound { operation: &'static str, unit: &'static str, limit: usize, actual: usize },

    #[error("unsupported schema version {found} (this build reads version {supported})")]
    UnsupportedSchemaVersion { found: u32, supported: u32 },
    #[error("structure array has {len} entries, expected {expected} for dimension {dim}")]
    MatrixLengthMismatch { len: usize, expected: usize, dim: usize },
    #[error("invalid rational '{value}' at structure index {index}")]
    InvalidRational { index: usize, value: String },
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// True for refusals caused by the desk-scale search bounds rather than
    /// by malformed input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(self, Error::ResourceBound { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
