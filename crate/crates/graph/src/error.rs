use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),

    #[error("orientation target {target} is not an endpoint of edge {edge}")]
    NotAnEndpoint { edge: usize, target: usize },

    #[error("graph is not a forest ({m} edges, {components} components, {n} vertices)")]
    NotAForest { n: usize, m: usize, components: usize },
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
