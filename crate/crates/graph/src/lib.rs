//! Graph model shared by the labeling algorithms and their checkers.

pub mod enumerate;
mod error;
pub mod generate;
mod graph;
pub mod io;
pub mod label;
mod line_graph;
mod orientation;

pub use crate::error::{GraphError, Result};
pub use crate::generate::{generate, Generated, GeneratorKind, GeneratorSpec};
pub use crate::graph::{EdgeId, Graph, VertexId};
pub use crate::io::{load_edge_list, to_edge_list};
pub use crate::label::{ClusterLabel, EntityKind, ForestLabeling, Label, LabelDomain, LabelError};
pub use crate::line_graph::line_graph;
pub use crate::orientation::Orientation;

/// Orients every edge toward its higher-ID endpoint.
pub fn orient_by_id(g: &Graph) -> Orientation {
    Orientation::by_id(g)
}
