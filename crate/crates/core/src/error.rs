use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index out of range: {index} (dimension {dim})")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("duplicate entry for indices {0:?}")]
    DuplicateEntry(Vec<usize>),

    #[error("invalid permutation images {0:?}")]
    InvalidPermutation([u8; 3]),

    #[error("subgroup index must be in 1..=6, got {0}")]
    InvalidSubgroup(u8),

    #[error("G_i^! identities are defined for i in 2..=6, got {0}")]
    BangIndex(u8),

    #[error("unknown special vector {0:?}")]
    UnknownVector(String),

    #[error("unknown token {token:?} at position {position}")]
    UnknownToken { position: usize, token: String },

    #[error("subspace is not invariant under the group action")]
    NotInvariant,

    #[error("vector is not a two-sided unit: {0}")]
    InvalidUnit(String),

    #[error("functional is not a counit: {0}")]
    InvalidCounit(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid document: {0}")]
    Format(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),

    #[error("catalog divergence: {0:?} not reproduced by the search oracles")]
    CatalogDivergence(Vec<String>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
