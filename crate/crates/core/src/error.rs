use thiserror::Error;

use crate::boards::Square;
use crate::complexes::Vertex;

/// Errors raised by the library. Every variant describes a rejected input;
/// internal invariants that cannot fail are asserted instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rook configuration is not non-taking: {0} and {1} share a row or column")]
    Taking(Square, Square),

    #[error("order is not a permutation of the distinguished rows: {0}")]
    NotAPermutation(String),

    #[error("square {0} is not on the board")]
    SquareNotOnBoard(Square),

    #[error("invalid board specification: {0}")]
    InvalidSpec(String),

    #[error("{0} is not a vertex of the complex")]
    NotAVertex(Vertex),

    #[error("join factors share the vertex {0}")]
    OverlappingVertices(Vertex),

    #[error("not a subcomplex: face {0} is missing from the ambient complex")]
    NotASubcomplex(String),

    #[error("chain is not supported on the complex: {0}")]
    ForeignChain(String),

    #[error("not a simplicial sphere: {0}")]
    NotASphere(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
