//! Faces of Birkhoff polytopes, represented by their face graphs.
//!
//! A face of the Birkhoff polytope `B_n` corresponds to an elementary bipartite
//! graph with `n` nodes per layer; its vertices are the perfect matchings of the
//! graph. This crate computes dimensions, facets, face lattices and
//! combinatorial types of such faces, implements the graph operations that
//! preserve or build types (reduction, resolution, products, pyramids, wedges,
//! joined products), and enumerates all combinatorial types of a given
//! dimension.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command-line
//! front end and the multi-threaded driver live in the `bfk` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod canon;
pub mod constructions;
pub mod enumeration;
pub mod faces;
pub mod graph;
pub mod matching;
pub mod reduction;
pub mod types;

pub use graph::{Edge, FaceGraph, Graph, GraphError, Layer, LayeredNode, MultiGraph, PerfectMatching};
pub use types::{Catalog, CatalogEntry, TypeFingerprint, TypeKey};
