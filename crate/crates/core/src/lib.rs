//! Numerical laboratory for randomly generated operators and semigroups.
//!
//! The central construction is the operator average `R = Σ_i w_i U(g_i)` of a
//! (projective, anti-) representation `U` of a locally compact group against a
//! probability measure with atoms `(g_i, w_i)`. Feeding a convolution semigroup
//! of measures `t ↦ μ_t` through this average yields a continuous semigroup of
//! operators `S_t`, and specializations of the pair `(U, μ_t)` recover random
//! unitary semigroups, twirling channels on density matrices, tomographic
//! semigroups on Weyl-system tomograms, and probability semigroups on functions
//! over a finite group.
//!
//! Every module pairs its constructions with executable checks: semigroup law,
//! continuity at zero, generator estimation, CPTP structure, tomographic
//! intertwining, and stochastic-matrix identification. Checks return report
//! values that serialize to JSON.

pub mod error;
pub mod groups;
pub mod linalg;
pub mod measures;
pub mod probability;
pub mod randgen;
pub mod report;
pub mod representations;
pub mod tomographic;
pub mod twirling;

pub use error::{Error, Result};
