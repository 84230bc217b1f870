//! Exact-arithmetic equilateral polygons in rectangular lattices.
//!
//! The lattice of parameter `m` (a positive square-free integer) consists of
//! the plane points `(a, b*sqrt(m))` with integer `a`, `b`. This crate
//! constructs closed equilateral walks in such lattices, verifies arbitrary
//! walks without any floating point, and cross-checks the constructions
//! against an independent brute-force search:
//!
//! * [`walk`] — the edge-sequence data model, the exact verifier, and the
//!   canonical edge order used for serialized output;
//! * [`lattice`] — vectors, the norm form `a^2 + m*b^2`, and exact sign
//!   computation in `Z[sqrt(m)]`;
//! * [`simplicity`] — the exact self-intersection test;
//! * [`construct`] — parallelograms for every even size and, for
//!   `m = 3 (mod 4)`, the five-direction odd base walk with two
//!   interchangeable solvers plus the two-edge extension step;
//! * [`search`] — representation enumeration, exhaustive zero-sum multiset
//!   search, and the minimal odd-gon oracle.
//!
//! All values are immutable and all operations are pure functions, so
//! everything can be shared freely across threads.

pub mod construct;
pub mod error;
pub mod lattice;
pub mod search;
pub mod simplicity;
pub mod walk;

pub use construct::{
    assemble_odd_walk, base_params, even_ngon, extend_by_two, ngon, solve_t_closed_form,
    solve_t_euclid, BaseParams, ClosedFormDecomposition, ConstructionParams, SolveMethod,
};
pub use error::{Error, Result};
pub use lattice::{LatticeParams, LatticeVector, QuadInt};
pub use search::{
    check_necessary_condition, is_square_free, isqrt, largest_prime_factor, min_odd_ngon,
    min_odd_ngon_with, representations, zero_sum_search, SearchBounds, SearchOptions,
    SearchOutcome, SearchStatus,
};
pub use simplicity::is_simple;
pub use walk::{canonical_order, edge_sum, EquilateralWalk, VerificationReport};
