//! Detection, decomposition and sparsification of 2-vertex strongly
//! biconnected directed graphs.
//!
//! A digraph is *strongly biconnected* when it is strongly connected and its
//! underlying undirected graph is biconnected, and *2-vertex strongly
//! biconnected* (2VSB) when it has at least three vertices and stays
//! strongly biconnected after deleting any one vertex. The crate provides
//! checkers for these properties, the strongly biconnected component
//! decomposition, two approximation algorithms for the minimum-size 2VSB
//! spanning subgraph, and an exact branch-and-bound oracle for small inputs.

pub mod approx;
pub mod bench;
pub mod connectivity;
pub mod dot;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod sparsify;
pub mod strong;

pub use approx::{
    approx_m2vsbss_alg1, approximate, augment_for_bap, bound_report, union_algorithm, ApproxResult,
    Augmentation, BoundReport, Method, UnionResult,
};
pub use connectivity::{
    blocks, is_2vc_digraph, is_3vc_ugraph, is_biconnected, is_strongly_connected, scc,
    BlockDecomposition, Partition,
};
pub use error::{Error, Result};
pub use exact::{exact_m2vsbss, lower_bound, ExactLimits, ExactResult};
pub use fixtures::Fixture;
pub use graph::{Arc, ArcSet, Digraph, Edge, EdgeSet, UGraph, VertexId};
pub use sparsify::{minimal_2vc_subgraph, minimal_3vc_subgraph, DeletionOrder, OrderMode};
pub use strong::{
    b_articulation_points, is_2vsb, is_strongly_biconnected, sbcc, BapReport, SbccDecomposition,
};
