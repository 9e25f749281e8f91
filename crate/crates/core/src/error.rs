use thiserror::Error;

/// Errors raised while building or validating a group.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group order exceeds the cap of {cap} (reached {reached})")]
    OrderCapExceeded { cap: usize, reached: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generator {generator} is not a permutation of 0..{degree}")]
    InvalidPermutation { generator: usize, degree: usize },
    #[error("action image of element {element} is not an automorphism")]
    NotAnAutomorphism { element: usize },
    #[error("action is not a homomorphism at ({a}, {b})")]
    NotAHomomorphism { a: usize, b: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

/// Errors from subgroup operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
    #[error("element {element} out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
}

/// Errors from group-spec parsing and evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("{source_text}: {error}")]
    Eval {
        source_text: String,
        #[source]
        error: GroupError,
    },
}
