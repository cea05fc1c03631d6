use thiserror::Error;

use crate::operation::Convention;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which symmetry an operation was required to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryScope {
    /// Invariance under permutations of the first `n - 1` slots.
    Partial,
    /// Invariance under all permutations of the `n` slots.
    Full,
}

impl std::fmt::Display for SymmetryScope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SymmetryScope::Partial => f.write_str("partial"),
            SymmetryScope::Full => f.write_str("full"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("basis index {index} out of range for a space of dimension {dim}")]
    Index { index: usize, dim: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("insertion position {position} out of range for outer arity {arity}")]
    Position { position: usize, arity: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    Length { expected: usize, found: usize },

    #[error("invalid block list {0:?}: blocks must be nonempty and positive")]
    Block(Vec<usize>),

    #[error("not a permutation: {0:?}")]
    Permutation(Vec<usize>),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("convention mismatch: expected {expected}, found {found}")]
    Convention { expected: Convention, found: Convention },

    #[error("operation of arity {arity} has degree {found}, the convention requires {expected}")]
    Degree { arity: usize, expected: i64, found: i64 },

    #[error("arity {arity} exceeds the family's arity cap {cap}")]
    ArityCap { arity: usize, cap: usize },

    #[error(
        "arity {arity} operation violates {scope} symmetry under the transposition ({position} {next})",
        next = position + 1
    )]
    Symmetry { arity: usize, position: usize, scope: SymmetryScope },

    #[error("operation requires a space concentrated in degree 0")]
    Grading,

    #[error("operands live on different graded spaces")]
    SpaceMismatch,

    #[error("word of weight {weight} is outside the range 1..={cap}")]
    Weight { weight: usize, cap: usize },

    #[error("coalgebra kind mismatch: expected {expected}, found {found}")]
    Kind { expected: String, found: String },

    #[error("internal consistency failure at n = {n}: {detail}")]
    RoutesDisagree { n: usize, detail: String },

    #[error("{path}: {message}")]
    Document { path: String, message: String },

    #[error("malformed rational `{0}`")]
    Rational(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn document(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Document { path: path.into(), message: message.into() }
    }
}
