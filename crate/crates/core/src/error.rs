use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension {n} out of range 1..={max}", max = crate::MAX_DIM)]
    DimensionOutOfRange { n: usize },

    #[error("state index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("line {line}: {msg}")]
    BadSyntax { line: usize, msg: String },

    #[error("line {line}: duplicate row for input {input}")]
    DuplicateRow { line: usize, input: String },

    #[error("missing row for input {input}")]
    MissingRow { input: String },

    #[error("line {line}: expected {expected} bits, got {got}")]
    RowDimension {
        line: usize,
        expected: usize,
        got: usize,
    },

    #[error("not a bijection: output {output} appears more than once")]
    NotBijective { output: String },

    #[error("not a permutation of 0..{n}")]
    NotAPermutation { n: usize },

    #[error("times must be strictly increasing at position {position}")]
    NonIncreasingTimes { position: usize },

    #[error("sequence is not an anti-orbit of the given schedule")]
    NotAnAntiOrbit,

    #[error("anti-orbit branch count exceeds cap {cap}")]
    BranchExplosion { cap: usize },

    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("generator {index} is not an automorphism of the given function")]
    NotAnAutomorphism { index: usize },

    #[error("pair kind mismatch: both pairs must be isomorphisms")]
    KindMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
