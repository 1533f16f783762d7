//! Walls on lamplighter groups `H ≀ F_n` over free groups.
//!
//! The free group `F_n` carries the walls of its Cayley tree. These induce
//! a left-invariant wall structure on `H ≀ F_n` for every finite `H`, whose
//! wall distance is proper. This crate builds those walls, counts the ones
//! separating two elements, checks the group action on them, verifies
//! properness on finite balls, and certifies the resulting distance as
//! conditionally negative definite through an explicit 0/1 embedding.

pub mod cli;
pub mod embedding;
pub mod error;
pub mod groups;
pub mod syntax;
pub mod walls;
pub mod wreath_walls;

pub use error::{Error, Result};

/// Default limit on enumerated elements.
pub const DEFAULT_CAP: u64 = 1_000_000;
