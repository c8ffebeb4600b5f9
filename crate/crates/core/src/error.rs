use thiserror::Error;

use crate::gf2::Gf2Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linear(#[from] Gf2Error),

    #[error("RepeatedVertex: simplex {id} repeats vertex {vertex}")]
    RepeatedVertex { id: String, vertex: String },
    #[error("MissingFace: simplex {id} needs a face on ({})", .face.join(","))]
    MissingFace { id: String, face: Vec<String> },
    #[error(
        "AmbiguousFace: simplex {id} has {count} candidate faces on ({}); list its faces explicitly",
        .face.join(",")
    )]
    AmbiguousFace {
        id: String,
        face: Vec<String>,
        count: usize,
    },
    #[error("BadFaceBinding: simplex {id}: {reason}")]
    BadFaceBinding { id: String, reason: String },
    #[error("DuplicateId: {0}")]
    DuplicateId(String),
    #[error("UnknownVertex: simplex {id} uses undeclared vertex {vertex}")]
    UnknownVertex { id: String, vertex: String },
    #[error("ArityMismatch: simplex {id} of dimension {dim} lists {count} vertices")]
    ArityMismatch { id: String, dim: usize, count: usize },
    #[error("dimension {dim} out of range for a complex of dimension {n}")]
    DimensionOutOfRange { dim: usize, n: usize },
    #[error("expected a simplex or chain of dimension {expected}, got {actual}")]
    WrongDimension { expected: usize, actual: usize },
    #[error("unknown simplex id {0}")]
    UnknownSimplex(String),
    #[error("simplex index {index} out of range in dimension {dim}")]
    IndexOutOfRange { dim: usize, index: usize },
    #[error("chain of dimension {dim} has support length {actual}, table has {expected}")]
    ChainLength {
        dim: usize,
        expected: usize,
        actual: usize,
    },
    #[error("NotACycle: {0}")]
    NotACycle(String),
    #[error("boundary mismatch: the chain does not bound the given cycle")]
    BoundaryMismatch,
    #[error("not a graph: expected a complex of dimension 1, got {0}")]
    NotAGraph(usize),
    #[error("cycle list is empty")]
    EmptyList,
    #[error("method {method} does not apply: {reason}")]
    MethodNotApplicable {
        method: &'static str,
        reason: String,
    },
    /// Two characterizations of k-boundance returned different verdicts.
    #[error("MethodDisagreement: {summary}")]
    MethodDisagreement {
        summary: String,
        /// JSON reproducer: complex, cycle list, k and per-method verdicts.
        reproducer: String,
    },
    #[error("TransitivityViolation: cycles {a} ~ {b} and {b} ~ {c} but not {a} ~ {c} at k = {k}")]
    TransitivityViolation {
        a: usize,
        b: usize,
        c: usize,
        k: usize,
    },
    #[error("search space too large: {what} ({size} exceeds the limit {limit})")]
    SearchTooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("DimensionTooLarge: dim Γ = {dim} exceeds the enumeration bound {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("NoPath: {0}")]
    NoPath(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
