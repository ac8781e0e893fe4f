//! One-pass bubble sort and the pattern classes it pulls back.
//!
//! For a pattern `π`, this crate decides whether the set of permutations `σ`
//! with `B(σ)` avoiding `π` is closed under taking subpermutations, builds its
//! basis when it is, and produces a witness pair when it is not. An exhaustive
//! oracle over small symmetric groups checks every construction.

pub mod basis;
pub mod cache;
pub mod classification;
pub mod diagram;
pub mod error;
pub mod operators;
pub mod oracle;
pub mod perm;
pub mod verify;

pub use basis::{inverse_basis, inverse_basis_set, BasisResult, CrossCheck, Outcome};
pub use classification::{classify, witness_pair, Case, Classification, WitnessPair};
pub use error::{Error, Result};
pub use operators::{apply_chain, bubble_k, bubble_recursive, bubble_splice, stack_pass, OperatorChain};
pub use oracle::{ClassSpec, CountSequence, DownsetReport, Oracle, OracleConfig};
pub use perm::{contains, parse_permutation, standardize, Permutation, Word};
