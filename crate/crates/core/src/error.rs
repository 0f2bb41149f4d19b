//! Crate-wide error type.

use crate::ground::Subset;
use thiserror::Error;

/// Which polymatroid rank axiom a table violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// Normalization: the empty set has rank zero.
    P1,
    /// Monotonicity.
    P2,
    /// Submodularity.
    P3,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axiom::P1 => write!(f, "P1"),
            Axiom::P2 => write!(f, "P2"),
            Axiom::P3 => write!(f, "P3"),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ground set size {0} out of range (1..=16)")]
    GroundSize(usize),

    #[error("rank axiom {axiom} violated at {witness_a} / {witness_b}")]
    AxiomViolation {
        axiom: Axiom,
        witness_a: Subset,
        witness_b: Subset,
    },

    #[error("not a matroid: {0}")]
    NotAMatroid(String),

    #[error("not a polymatroid: {0}")]
    NotAPolymatroid(String),

    #[error("vector is not a base: {0:?}")]
    NotABase(Vec<i64>),

    #[error("set {0} is not a basis")]
    NotABasis(Subset),

    #[error("bounding box volume {0} exceeds limit {1}")]
    BoxOverflow(u128, u128),

    #[error("degree bound check failed at (t,u)=({t},{u}): counted {counted}, fitted {fitted}")]
    DegreeCheckFailed {
        t: u32,
        u: u32,
        counted: i64,
        fitted: i64,
    },

    #[error("variable mismatch: ({0},{1}) vs ({2},{3})")]
    VariableMismatch(String, String, String, String),

    #[error("polynomial division by {0} is not exact")]
    NotDivisible(String),

    #[error("basis search did not terminate within {0} replacements")]
    NonTermination(usize),

    #[error("intervals do not partition the subset lattice: {0}")]
    NotAPartition(String),

    #[error("activity polynomial depends on the element order: {0}")]
    OrderDependenceDetected(String),

    #[error("simplex partition violated at point {0:?}: {1}")]
    PartitionViolation(Vec<i64>, String),

    #[error("dual parameter {s} below the maximum singleton rank {min}")]
    STooSmall { s: i64, min: i64 },

    #[error("set {0} is not a circuit-hyperplane: {1}")]
    NotACircuitHyperplane(Subset, String),

    #[error("identity failed: {0}")]
    IdentityFailed(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
