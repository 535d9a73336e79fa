use thiserror::Error;

/// Errors produced by the relation engine and its front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state {state} is out of range for q = {q}")]
    StateOutOfRange { state: u32, q: u32 },

    #[error("ordinal {ordinal} is out of range (table has {cells} cells)")]
    OrdinalOutOfRange { ordinal: usize, cells: usize },

    #[error("arity mismatch: expected {expected} states, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("state count must be at least 2, got {0}")]
    StateCount(u32),

    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("invalid point name `{0}`")]
    PointName(String),

    #[error("table of {q}^{k} cells exceeds the limit of {limit} cells")]
    TooLarge { q: u32, k: usize, limit: u64 },

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("not a permutation of the domain points: {0}")]
    NotPermutation(String),

    #[error("bit table has length {got}, expected {expected}")]
    BitLength { expected: usize, got: usize },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("relation is empty")]
    EmptyRelation,

    #[error("relation is trivial")]
    TrivialRelation,

    #[error("relation on {face} is not a consequence: its extension misses tuples of the source")]
    NotAConsequence { face: String },

    #[error("q = {0} is not prime")]
    NotPrime(u32),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
