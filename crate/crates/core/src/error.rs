use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k = {k} is outside the supported range 1..={max}")]
    Capacity { k: usize, max: usize },

    #[error("word length {0} is not an odd number in 3..=63")]
    BadLength(usize),

    #[error("invalid bit string {0:?}")]
    BadBits(String),

    #[error("expected weight {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("expected b_{index} = {expected} in {word}")]
    BadEntry {
        word: String,
        index: usize,
        expected: u8,
    },

    #[error("no such edge: {0}")]
    UnknownEdge(String),

    #[error("edge {0} is horizontal")]
    NotSkew(String),

    #[error("malformed δ-string {0:?}: {1}")]
    MalformedDelta(String, &'static str),

    #[error("{0} is not a node of the lexical tree")]
    NotATreeNode(String),

    #[error("invalid sequence {0:?}: {1}")]
    InvalidSequence(String, &'static str),

    #[error("walk breaks at step {step}: {reason}")]
    Walk { step: usize, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
