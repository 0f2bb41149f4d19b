//! Exact computation of the two-parameter lattice-point invariant of
//! matroid and polymatroid base polytopes.
//!
//! The central object is the count `Q(t,u)` of lattice points in the
//! Minkowski sum of a base polytope with dilates of the standard simplex
//! and its reflection. The crate interpolates that count into a bivariate
//! polynomial `Q'(x,y)`, converts it to and from the Tutte polynomial for
//! matroids, evaluates transfer activities and their univariate
//! generating polynomials, enumerates top-degree faces and Dawson
//! partitions, and exercises the algebra of direct sums, duals, slices,
//! and circuit-hyperplane relaxations. All arithmetic is exact.
//!
//! Everything is immutable after construction and the operations are pure
//! functions, so values can be shared across threads freely.

pub mod activity;
pub mod base;
pub mod constructions;
pub mod corpus;
pub mod dawson;
pub mod error;
pub mod geometry;
pub mod ground;
pub mod poly;
pub mod rank;
pub mod tutte;
pub mod verify;

pub use base::BaseVector;
pub use error::{Error, Result};
pub use geometry::{MinkowskiConfig, QTable};
pub use ground::{ElementOrder, GroundSet, Subset};
pub use poly::BivariatePolynomial;
pub use rank::{Polymatroid, RankFunction};
