//! Biclique partitions of co-chordal graphs.
//!
//! A co-chordal graph `G` (one whose complement is chordal) has a biclique
//! partition with `mc(G^c) - 1` parts, where `mc` counts maximal cliques.
//! This crate builds such partitions two ways, from a clique tree of `G^c`
//! and from a LexBFS elimination ordering of `G^c`, verifies them, and
//! brackets the true partition number `bp(G)` with lower bounds and an
//! exact branch-and-bound oracle for small graphs.

pub mod cliques;
pub mod error;
pub mod exact;
pub mod format;
pub mod generators;
pub mod graph;
pub mod heuristics;
pub mod ordering;
pub mod partition;

pub use cliques::{
    build_clique_tree, clique_tree_defect, is_clique_vertex_irreducible, is_split, max_independent_set_chordal,
    maximal_cliques_chordal, mc, verify_clique_tree, CliqueTree, CliqueTreeEdge,
};
pub use error::{Error, Result};
pub use exact::{
    bounds_report, bp_monotonicity_check, clique_number, exact_bp, lower_bound_omega, Bound, BoundFlags, BoundRule,
    BoundsReport, ExactResult, OracleConfig, OracleOutcome,
};
pub use generators::{gen, gen_co_chordal, GenSpec};
pub use graph::{Graph, Vertex, VertexSet};
pub use heuristics::{
    clique_tree_splits, lexbfs_splits, partition_auto, partition_via_clique_tree, partition_via_lexbfs,
    EdgeChoiceStrategy, Method, SplitStep,
};
pub use ordering::{is_chordal, is_peo, lexbfs, NonChordalCertificate, VertexOrdering};
pub use partition::{
    decomposition_edges, is_biclique_subgraph, is_partitioned_biclique, verify_partition, Biclique, BicliquePartition,
    Edge, EdgeDecomposition, Verdict, Violation,
};
