pub mod graph;
pub mod instances;
pub mod io;
pub mod orders;
pub mod predicates;

pub use graph::{intersection_graph, norm_edge, Edge, Graph, VertexId};
pub use instances::{
    is_t_biconnected, leaf_expand, BetweennessInstance, LeafTree, MaxSefeInstance, PstInstance,
    PtbeInstance, SunflowerSefeInstance, XorSatInstance,
};
pub use orders::{is_represented_by, page_alternation_free, LinearOrder};
pub use predicates::{
    is_biconnected, is_caterpillar, is_series_parallel, is_tree, is_triconnected,
    structural_predicates, StructuralPredicates,
};
