use serde::Serialize;

use privlabel_graph::{EdgeId, VertexId};

/// What a failed check points at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Adjacent vertices with the same label.
    MonochromaticEdge { u: VertexId, v: VertexId, label: u64 },
    /// Adjacent entities whose domains intersect.
    SharedLabel { a: usize, b: usize, label: u64 },
    /// A selection of one label per vertex that is not proper although the
    /// domains look disjoint (or the other way round).
    SweepDisagrees { selection: Vec<u64> },
    /// An entity with `count` neighbors holding `label`, more than allowed.
    Defect { entity: usize, label: u64, count: usize },
    /// Edge closing a cycle inside one forest class.
    Cycle { class: usize, edge: EdgeId },
    /// Two out-edges of one vertex with the same forest label.
    RepeatedOutLabel { vertex: VertexId, class: usize },
    /// Forest labeling whose recorded source is not an endpoint of the edge.
    BadSource { edge: EdgeId },
    /// Holders of one label further apart than allowed; `None` means
    /// disconnected.
    FarApart { label: u64, u: VertexId, v: VertexId, distance: Option<usize> },
    TooManyLabels { count: usize, budget: usize },
    NonUniformDomain { vertex: VertexId, size: usize, expected: usize },
    /// Edges sharing an endpoint with the same color.
    AdjacentEdges { a: EdgeId, b: EdgeId, color: u64 },
    Undominated { edge: EdgeId },
    NotMaximal { edge: EdgeId },
    EdgeOutOfRange { edge: EdgeId },
    /// A set of a set system covered too often by the union of `others`.
    Covered { set: u64, others: Vec<u64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail { witness: Witness },
    /// Some entity has no label.
    Incomplete { entity: usize },
    /// Some entity has an empty domain.
    Degenerate { entity: usize },
}

impl Verdict {
    pub fn fail(witness: Witness) -> Self {
        Verdict::Fail { witness }
    }

    pub fn passed(&self) -> bool {
        *self == Verdict::Pass
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fail { witness } => Some(witness),
            _ => None,
        }
    }

    /// Keeps the first non-passing verdict.
    pub fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        if self.passed() {
            other()
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectCheck {
    pub verdict: Verdict,
    pub max_defect: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NetworkCheck {
    pub verdict: Verdict,
    /// Largest distance between two holders of one label; `None` if some
    /// label is held in two components.
    pub max_weak_diameter: Option<usize>,
    pub distinct_labels: usize,
}
