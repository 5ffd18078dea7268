//! From separator families to minimal triangulations.

mod enumerate;
mod extend;
mod family;
mod fill;

pub use enumerate::{
    enum_max_parallel_families, enum_min_triangulations, msep_sgr, MinTriangulations, ParallelFamilies, SeparatorGraph,
};
pub use extend::{
    decompose, decompose_vertex_sets, extend_ind_blackbox, extend_ind_separator, get_components, Extender,
};
pub use family::{is_minimal_triangulation, ParallelFamily, Triangulation};
pub use fill::{min_tri_sandwich, saturate_family, triangulate_heuristic};
