//! Computational workbench for right congruences on finite semigroups.
//!
//! The crate is organised around a small number of concrete carriers:
//!
//! - [`semigroup::FiniteSemigroup`]: a validated multiplication table, the
//!   universe for all finite computation;
//! - [`congruence::RightCongruence`]: a right-compatible partition, produced
//!   by closure from generating pairs (with replayable certificates) or by
//!   brute-force lattice enumeration;
//! - [`construct`]: product, union and extension constructions that return
//!   validated tables together with their structure maps;
//! - [`transfer`]: constructive generating-set recipes, each re-verified by
//!   closure against its target;
//! - [`fp`]: infinite semigroups with decidable normal forms, explored
//!   through bounded balls;
//! - [`suite`]: the built-in verification suite driven by the CLI and the
//!   acceptance tests.

pub mod congruence;
pub mod construct;
pub mod fp;
pub mod gallery;
pub mod green;
pub mod semigroup;
pub mod suite;
pub mod transfer;

pub use semigroup::{ElementId, FiniteSemigroup};
