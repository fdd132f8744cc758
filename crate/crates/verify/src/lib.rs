//! Checkers for labeling outputs and the privacy metrics of a run.
//!
//! Nothing here calls into the algorithms; every checker recomputes what it
//! needs from the graph and the output alone.

mod edge;
mod metrics;
mod search;
mod sweep;
mod vertex;
mod verdict;

pub use crate::edge::{
    check_edge_defect, check_edge_domains_disjoint, check_edge_dominating, check_edge_properness, check_matching,
    check_maximal_matching, check_partial_edge_properness,
};
pub use crate::metrics::{metrics, ratio_text, MetricsReport, NamedVerdict};
pub use crate::search::{bfs_distances, UnionFind};
pub use crate::sweep::{forest_assignment_sweep, SweepOutcome};
pub use crate::verdict::{DefectCheck, NetworkCheck, Verdict, Witness};
pub use crate::vertex::{
    check_cluster_coloring, check_defective_domains, check_defective_labels, check_domains_disjoint, check_forest_labeling, check_h_partition,
    check_network_decomposition, check_proper_vertex, exhaustive_selection_sweep, SWEEP_LIMIT,
};
