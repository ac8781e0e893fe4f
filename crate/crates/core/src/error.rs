use thiserror::Error;

use crate::perm::Permutation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {value} appears more than once")]
    DuplicateValue { value: u32 },

    #[error("value {value} is out of range for a permutation of length {len}")]
    OutOfRange { value: u32, len: usize },

    #[error("no permutation entries found in input")]
    EmptyTokenStream,

    #[error("malformed token {token:?} at byte {position}")]
    MalformedToken { token: String, position: usize },

    #[error("operation requires a non-empty permutation")]
    EmptyPermutation,

    #[error("malformed operator chain {chain:?}: {reason}")]
    MalformedChain { chain: String, reason: String },

    #[error("{permutation} is not handled by {operation}: {reason}")]
    WrongCase {
        operation: &'static str,
        permutation: Permutation,
        reason: String,
    },

    #[error("{0} already ends with its maximum")]
    EndsWithMax(Permutation),

    #[error("{0} is good: its preimage class is a pattern class, so no witness exists")]
    IsGoodPermutation(Permutation),

    #[error("{0} is not good: its preimage under one bubble pass is not a pattern class")]
    ContainsBadPermutation(Permutation),

    #[error("horizon {requested} exceeds the configured cap of {cap}")]
    HorizonExceeded { requested: usize, cap: usize },

    #[error("preimage of Av({pattern}) is not a downset up to length {horizon}; no basis exists")]
    NotADownset { pattern: String, horizon: usize },

    #[error("count sequence is empty")]
    EmptySequence,

    #[error("constructed basis for {pattern} disagrees with the oracle up to length {horizon}")]
    CrossCheckMismatch {
        pattern: Permutation,
        horizon: usize,
        constructed: Vec<Permutation>,
        empirical: Vec<Permutation>,
    },

    #[error("witness pair for {pattern} failed verification: {reason}")]
    InvalidWitness { pattern: Permutation, reason: String },

    #[error("highlight position {position} is out of range for length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("cache error: {0}")]
    Cache(String),
}
