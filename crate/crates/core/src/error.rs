//! Error type shared by the verification, construction, and search modules.

use std::fmt;

use num_bigint::BigInt;

use crate::lattice::LatticeVector;

/// Errors reported by walk verification, constructions, and the search oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A polygon needs at least three edges.
    WalkTooShort { n: usize },
    /// The zero vector is not admissible as a polygon edge.
    ZeroEdge { index: usize },
    /// The edge sum is nonzero, so the walk does not close up.
    NotClosed { sum: LatticeVector },
    /// The lattice parameter is inadmissible for the requested operation.
    BadModulus { m: BigInt, reason: &'static str },
    /// Construction parameters violate one of their invariants.
    InvalidParams(String),
    /// The input walk fails the closed-and-equilateral precondition.
    InvalidWalk(String),
    /// The polygon size is inadmissible. For odd sizes below the smallest
    /// constructible one, `n_base` carries that threshold so callers can
    /// fall back to the search oracle.
    BadN {
        n: u64,
        n_base: Option<BigInt>,
        reason: &'static str,
    },
    /// A depth-first search hit its node budget before completing.
    BudgetExhausted { nodes: u64 },
    /// A precondition on plain integer inputs was violated.
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::WalkTooShort { n } => {
                write!(f, "walk has {n} edges; a polygon needs at least 3")
            }
            Error::ZeroEdge { index } => {
                write!(f, "edge {index} is the zero vector")
            }
            Error::NotClosed { sum } => {
                write!(f, "walk is not closed; edge sum is {sum}")
            }
            Error::BadModulus { m, reason } => {
                write!(f, "lattice parameter m = {m} is inadmissible: {reason}")
            }
            Error::InvalidParams(msg) => {
                write!(f, "invalid construction parameters: {msg}")
            }
            Error::InvalidWalk(msg) => {
                write!(f, "invalid walk: {msg}")
            }
            Error::BadN { n, n_base, reason } => {
                write!(f, "polygon size n = {n} is inadmissible: {reason}")?;
                if let Some(n_base) = n_base {
                    write!(f, " (smallest constructible odd size is n_base = {n_base})")?;
                }
                Ok(())
            }
            Error::BudgetExhausted { nodes } => {
                write!(f, "search budget exhausted after {nodes} nodes")
            }
            Error::BadInput(msg) => {
                write!(f, "bad input: {msg}")
            }
        }
    }
}

impl std::error::Error for Error {}
