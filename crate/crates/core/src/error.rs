use thiserror::Error;

use privlabel_graph::{GraphError, LabelError, VertexId};

use crate::coverfree::FieldError;
use crate::sim::SimError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input is not an oriented forest: vertex {vertex} has out-degree {out_degree}")]
    NotAForest { vertex: VertexId, out_degree: usize },
    #[error("input coloring is not proper: edge ({0}, {1}) is monochromatic")]
    ImproperInput(VertexId, VertexId),
    #[error("vertex {vertex} found no admissible label (input precondition violated)")]
    NoResidual { vertex: VertexId },
    #[error("vertex {vertex} ended with an empty domain; retry with a seed other than {seed}")]
    EmptyDomain { vertex: VertexId, seed: u64 },
    #[error("no progress within {rounds} rounds (seed {seed})")]
    Incomplete { rounds: usize, seed: u64 },
    #[error(
        "arboricity bound {a} violated: {} remaining vertices all have degree above {threshold}",
        witness.len()
    )]
    ArboricityViolated { a: usize, threshold: usize, witness: Vec<VertexId> },
    #[error("peeling used all {budget} layers with {remaining} vertices left")]
    LayerBudgetExceeded { budget: usize, remaining: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
