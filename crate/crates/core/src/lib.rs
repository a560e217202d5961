//! Cyclic base orderings of graphs.
//!
//! A cyclic base ordering (CBO) of a connected graph on `n` vertices is a
//! cyclic arrangement of its edges in which every `n - 1` cyclically
//! consecutive edges form a spanning tree. This crate generates the graph
//! families where such orderings are studied, builds orderings for them
//! constructively, verifies orderings, decides existence by exhaustive
//! search on small graphs, and checks the density conditions that any
//! cyclically orderable graph must satisfy.

pub mod analysis;
pub mod constructors;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod graph;
pub mod ordering;
pub mod search;

pub use error::{Error, Result};
pub use graph::{DisjointSets, Graph, Rational, VertexSet};
pub use ordering::{verify_cbo, EdgeOrdering, FailureKind, VerificationReport, WindowFailure};
