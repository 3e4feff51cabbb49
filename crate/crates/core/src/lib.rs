//! Elimination orderings for hereditary graph classes.
//!
//! The crate computes LexBFS orderings, verifies them against the exact
//! three-vertex characterization, recognizes Truemper configurations (theta,
//! prism, pyramid, wheel and their subtypes), checks local decomposability
//! with respect to small pattern families, and uses the resulting
//! elimination orderings for maximum weighted clique and coloring
//! algorithms with certificate-producing (robust) variants.

pub mod algorithms;
pub mod configurations;
pub mod decomposability;
pub mod elimination;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lexbfs;

pub use error::{Error, Result};
pub use graph::{Graph, WeightedGraph, DEFAULT_MATRIX_CAP};
pub use lexbfs::{lexbfs, is_lexbfs_ordering, VertexOrdering};

/// Default cap for subset-enumeration searches (configuration containment,
/// class membership, long-hole detection).
pub const DEFAULT_BRUTE_CAP: usize = 16;
