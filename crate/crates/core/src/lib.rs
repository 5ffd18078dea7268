//! Enumeration of minimal separators, minimal triangulations and proper tree
//! decompositions of undirected graphs.
//!
//! The central object is the separator graph of `g`: its nodes are the minimal
//! separators of `g`, two of them adjacent when they cross. Its maximal
//! independent sets are exactly the maximal families of pairwise-parallel
//! minimal separators, and saturating such a family yields a minimal
//! triangulation (and every minimal triangulation arises this way once). The
//! separator graph is never built explicitly; [`sgr::MaxIndependentSets`]
//! walks it through a lazy separator stream, the crossing test, and an
//! extender that completes a parallel family.
//!
//! ```
//! use mintri::{enum_min_triangulations, Extender, Graph};
//!
//! let c6 = Graph::cycle(6);
//! let count = enum_min_triangulations(&c6, Extender::BlackBox)
//!     .unwrap()
//!     .map(Result::unwrap)
//!     .count();
//! assert_eq!(count, 14);
//! ```

mod bitset;
pub mod chordal;
pub mod error;
pub mod graph;
pub mod separators;
pub mod sgr;
pub mod treedecomp;
pub mod triangulator;

pub use chordal::{clique_tree, is_chordal, max_cliques_chordal, mcs_order, CliqueTree};
pub use error::{Error, Result};
pub use graph::{connected_components, induced_subgraph, neighborhood, saturate, Graph, Subgraph, VertexSet};
pub use separators::{
    clq_min_seps, crosses, enum_min_seps, extract_min_seps_chordal, find_min_sep, is_minimal_separator, is_separator,
    MinSeps, Separator,
};
pub use sgr::{enum_max_independent, explicit_graph_sgr, EnumStats, Event, MaxIndependentSets, SuccinctGraph};
pub use treedecomp::{
    clique_graph, enum_max_spanning_trees, enum_proper_tds, is_proper, is_tree_decomposition, saturate_td, subsumes,
    ProperTreeDecompositions, TreeDecomposition, WeightedCliqueGraph,
};
pub use triangulator::{
    decompose, enum_max_parallel_families, enum_min_triangulations, extend_ind_blackbox, extend_ind_separator,
    get_components, is_minimal_triangulation, min_tri_sandwich, msep_sgr, saturate_family, triangulate_heuristic,
    Extender, MinTriangulations, ParallelFamily, Triangulation,
};
