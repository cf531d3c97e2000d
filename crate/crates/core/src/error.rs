use thiserror::Error;

use crate::rootdata::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal rank {rank} for type {family}")]
    IllegalRank { family: Family, rank: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid root pair: alpha = +/- beta")]
    InvalidPair,
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight system is empty")]
    EmptySystem,
    #[error("representation does not have central kernel")]
    CentralKernelViolated,
    #[error("cocharacter is central (all simple-root pairings vanish)")]
    CentralMu,
    #[error("invalid prime {0}")]
    InvalidPrime(u64),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    /// Raised when an identity that always holds for correct input fails;
    /// points at an implementation bug rather than bad input.
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("p-closeness equivalence violated: {0}")]
    EquivalenceViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
