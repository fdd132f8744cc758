//! The table of known inherently private algorithms, one row per main tag.

use num_rational::Ratio;
use serde::Serialize;

use crate::algorithm::{Algorithm, Expectation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub problem: &'static str,
    pub graph_class: &'static str,
    pub rounds: &'static str,
    pub solution_domain: &'static str,
    pub contingency_factor: &'static str,
}

const fn row(
    problem: &'static str,
    graph_class: &'static str,
    rounds: &'static str,
    solution_domain: &'static str,
    contingency_factor: &'static str,
) -> TableRow {
    TableRow { problem, graph_class, rounds, solution_domain, contingency_factor }
}

pub fn table_row(algorithm: Algorithm) -> Option<TableRow> {
    Some(match algorithm {
        Algorithm::Cv3Delta => row("3Δ-Coloring", "Oriented trees", "O(log* n)", "Δ", "3"),
        Algorithm::RandomColoring => row("2c·Δ·log n-Coloring", "General", "O(1)", "c·log n/2", "O(Δ)"),
        Algorithm::Delta2Coloring => row("O(Δ²)-Coloring", "General", "log* n + O(1)", "Δ", "O(Δ)"),
        Algorithm::DefectiveColoring => {
            row("p-Defective O((Δ/p)²)-Coloring", "General", "O(log* n)", "O(Δ/p)", "O(Δ/p)")
        }
        Algorithm::ArboricityColoring => {
            row("2a·c·log n-Coloring", "Bounded arboricity a", "O(log n)", "O(log n)/2", "O(a)")
        }
        Algorithm::NetworkDecomposition => {
            row("(O(log n), O(c·log n))-Network Decomposition", "General", "O(log² n)", "c > 1", "O(log n)")
        }
        Algorithm::ForestId => row("Δ-Forest Decomposition", "General", "O(1)", "C(Δ, |E(v)|)", "1"),
        Algorithm::ForestHPartition => {
            row("(2+ε)·a-Forest Decomposition", "Bounded arboricity a", "O(log n)", "C((2+ε)a, |E(v)|)", "1")
        }
        Algorithm::EdgeRandom => row("O(Δ·log n)-Edge Coloring", "General", "O(1)", "c·log n", "O(Δ)"),
        Algorithm::EdgeDelta2 => row("O(Δ²)-Edge Coloring", "General", "log* n + O(1)", "2Δ−1", "O(Δ)"),
        Algorithm::KuhnDefectiveEdge => {
            row("p-Defective O((Δ/p)²)-Edge Coloring", "General", "O(1)", "O((Δ/p)²)", "1")
        }
        Algorithm::DominatingEdgeColoring => {
            row("(t·√Δ)-Edge Coloring of a Dominating Set", "General", "Õ(log Δ + log³ log n)", "t", "√Δ")
        }
        Algorithm::LinialSaks | Algorithm::HPartition | Algorithm::SimpleEdgeColoring | Algorithm::MaximalMatching => {
            return None
        }
    })
}

/// A run's measured values next to its table row. Informational: the
/// retention figures of the randomized rows hold in expectation only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub row: TableRow,
    pub expected: Expectation,
    /// `None` where the row gives only an asymptotic bound.
    pub solution_domain_met: Option<bool>,
    pub contingency_factor_met: Option<bool>,
}

pub fn compare(
    algorithm: Algorithm,
    expected: Option<&Expectation>,
    domain_min: Option<usize>,
    factor: Option<Ratio<u64>>,
) -> Option<Comparison> {
    let row = table_row(algorithm)?;
    let expected = expected.cloned().unwrap_or_default();
    Some(Comparison {
        row,
        solution_domain_met: expected.solution_domain_min.map(|want| domain_min.is_some_and(|m| m as u64 >= want)),
        contingency_factor_met: expected.contingency_factor.map(|want| factor == Some(want)),
        expected,
    })
}
