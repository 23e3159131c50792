use std::fmt;

use thiserror::Error;

/// A syntax error at a byte offset of the input text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("vertex index {index} out of range for a tree with {size} vertices")]
    VertexOutOfRange { index: usize, size: usize },
    #[error("invalid labeling: {0}")]
    InvalidLabels(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("generator `{name}` has arity {arity}, expected a binary generator")]
    NotBinary { name: String, arity: usize },
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("slot {slot} out of range for an operation of arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("slot {0} used more than once")]
    DuplicateSlot(usize),
    #[error("expected {expected} arguments, found {found}")]
    ArgumentCount { expected: usize, found: usize },
    #[error("insertion needs at least one argument")]
    EmptyArguments,
    #[error("{flavor} rejects arity-1 input `{input}`")]
    FlavorViolation { flavor: String, input: String },
    #[error("unknown instance `{0}`")]
    UnknownInstance(String),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("law `{law}` is not available for instance `{instance}`")]
    UnsupportedLaw { law: String, instance: String },
    #[error("`{0}` is not supported by this instance")]
    UnsupportedOperation(String),
    #[error("size {requested} exceeds the hard cap of {cap}")]
    BudgetExceeded { requested: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
