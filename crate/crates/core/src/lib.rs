//! Distance, beer-distance and beer-path queries on outerplanar graphs.
//!
//! A *beer graph* is an undirected, positively weighted graph in which some
//! vertices are beer stores. A beer path is a walk that visits at least one
//! store; the beer distance is the weight of the lightest such walk.
//!
//! The pipeline is:
//!
//! 1. [`normalize`] completes the input to a maximal outerplanar graph and
//!    enforces the generalized triangle inequality.
//! 2. [`dual`] builds the weak dual tree, the per-vertex face paths and the
//!    per-vertex fan chains.
//! 3. [`beer_base`] computes beer distances for every edge and every vertex.
//! 4. [`oracle`] answers distance and beer-distance queries through a
//!    path-sum structure over the dual.
//! 5. [`reporter`] reconstructs beer paths in time linear in their length.
//! 6. [`sssp`] computes single-source beer distances: a heap-based
//!    shortest-path pass, then one linear traversal of the dual.
//!
//! [`Engine`] bundles all of the above.

pub mod beer_base;
pub mod dual;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod normalize;
pub mod oracle;
pub mod reporter;
pub mod sssp;
pub mod tree;
pub mod weight;

pub use engine::Engine;
pub use error::{Error, Result};
pub use graph::{BeerGraph, DistTable, Edge, EdgeId, FaceId, PathInG, VertexId};
pub use weight::Weight;
