//! Exact symbolic computation in generalized cluster algebras of geometric type.
//!
//! Seeds carry an exchange matrix, a cluster of Laurent polynomials over
//! `Z[x^±1]` with coefficients in the group ring of a tropical semifield, and a
//! coefficient tuple. Mutation follows the `(R, z)` rule, where each direction
//! `k` has a degree `r_k` and reciprocal frozen coefficients `z_{k,s}`.
//!
//! Modules, bottom up:
//!
//! - [`semifield`]: tropical semifields and their integral group rings
//! - [`laurent`]: sparse Laurent polynomials, exact division, d-vectors
//! - [`matrix`]: small integer and rational matrices
//! - [`seed`]: exchange matrices, mutation pairs, seeds, patterns
//! - [`invariants`]: D-, C-, G-matrices, F-polynomials, separation formulas
//! - [`graph`]: exchange graph enumeration and structural checks
//! - [`correspondence`]: comparing two patterns with equal `B·R`
//! - [`cli`]: JSON configuration and the commands behind `gcluster`
//!
//! The `examples/` directory has one runnable program per capability.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod correspondence;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod laurent;
pub mod matrix;
pub mod seed;
pub mod semifield;

pub use error::{Error, Result};
pub use graph::{explore, ExchangeGraph};
pub use laurent::LaurentPolynomial;
pub use matrix::IntMatrix;
pub use seed::{ClusterPattern, ExchangeMatrix, MutationPair, Seed};
pub use semifield::{GroupRingElement, SemifieldElement, TropicalSemifield};
