use std::collections::VecDeque;

use crate::error::{GraphError, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Direction assignment for every edge of a graph.
///
/// `acyclic` is computed by a topological sort at construction, so the flag is
/// always a certificate rather than a promise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    targets: Vec<VertexId>,
    sources: Vec<VertexId>,
    out_edges: Vec<Vec<EdgeId>>,
    acyclic: bool,
}

impl Orientation {
    /// `targets[e]` must be one of the endpoints of edge `e`.
    pub fn from_targets(g: &Graph, targets: Vec<VertexId>) -> Result<Self> {
        assert_eq!(targets.len(), g.m(), "one target per edge");
        let mut sources = Vec::with_capacity(g.m());
        let mut out_edges = vec![Vec::new(); g.n()];
        for (e, &t) in targets.iter().enumerate() {
            let (a, b) = g.edge(e);
            let s = if t == b {
                a
            } else if t == a {
                b
            } else {
                return Err(GraphError::NotAnEndpoint { edge: e, target: t });
            };
            sources.push(s);
            out_edges[s].push(e);
        }
        let acyclic = topological_order(g.n(), &out_edges, &targets).is_some();
        Ok(Orientation { targets, sources, out_edges, acyclic })
    }

    /// Every edge points from the lower to the higher ID.
    pub fn by_id(g: &Graph) -> Self {
        let targets = g.edges().iter().map(|&(_, v)| v).collect();
        Self::from_targets(g, targets).expect("canonical edges")
    }

    /// Orients every edge toward the endpoint ranked higher by `rank`, ties
    /// broken toward the higher ID.
    pub fn by_rank<K: Ord + Copy>(g: &Graph, rank: &[K]) -> Self {
        let targets = g
            .edges()
            .iter()
            .map(|&(u, v)| if (rank[u], u) > (rank[v], v) { u } else { v })
            .collect();
        Self::from_targets(g, targets).expect("endpoints")
    }

    /// Orients each tree of a forest toward its minimum-ID vertex, so every
    /// vertex except the roots has exactly one out-edge (to its parent).
    pub fn rooted_forest(g: &Graph) -> Result<Self> {
        let n = g.n();
        let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            components += 1;
            seen[root] = true;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for (&y, &e) in g.neighbors(x).iter().zip(g.incident_edges(x)) {
                    if !seen[y] {
                        seen[y] = true;
                        parent_edge[y] = Some(e);
                        queue.push_back(y);
                    }
                }
            }
        }
        if g.m() + components != n {
            return Err(GraphError::NotAForest { n, m: g.m(), components });
        }
        let mut targets = vec![usize::MAX; g.m()];
        for (child, e) in parent_edge.iter().enumerate() {
            if let Some(e) = *e {
                targets[e] = g.other_endpoint(e, child);
            }
        }
        Self::from_targets(g, targets)
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.sources[e]
    }

    pub fn target(&self, e: EdgeId) -> VertexId {
        self.targets[e]
    }

    pub fn targets(&self) -> &[VertexId] {
        &self.targets
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_edges[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        self.out_edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }

    /// Head of the unique out-edge, for orientations of forests.
    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        match self.out_edges[v].as_slice() {
            [] => None,
            [e] => Some(self.targets[*e]),
            _ => panic!("vertex {v} has out-degree > 1"),
        }
    }
}

fn topological_order(
    n: usize,
    out_edges: &[Vec<EdgeId>],
    targets: &[VertexId],
) -> Option<Vec<VertexId>> {
    let mut indegree = vec![0usize; n];
    for &t in targets {
        indegree[t] += 1;
    }
    let mut ready: Vec<VertexId> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &e in &out_edges[v] {
            let t = targets[e];
            indegree[t] -= 1;
            if indegree[t] == 0 {
                ready.push(t);
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clique(n: usize) -> Graph {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, pairs).unwrap()
    }

    #[test]
    fn id_orientation_on_k4() {
        let g = clique(4);
        let o = Orientation::by_id(&g);
        let outs: Vec<_> = (0..4).map(|v| o.out_degree(v)).collect();
        assert_eq!(outs, vec![3, 2, 1, 0]);
        assert!(o.is_acyclic());
    }

    #[test]
    fn single_edge_points_up() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let o = Orientation::by_id(&g);
        assert_eq!((o.source(0), o.target(0)), (0, 1));
    }

    #[test]
    fn cyclic_orientation_is_flagged() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        // 0->1, 1->2, 2->0
        let o = Orientation::from_targets(&g, vec![1, 0, 2]).unwrap();
        assert!(!o.is_acyclic());
        assert!(Orientation::from_targets(&g, vec![2, 0, 2]).is_err());
    }

    #[test]
    fn rooted_forest_gives_parents() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let o = Orientation::rooted_forest(&g).unwrap();
        assert_eq!(o.parent(0), None);
        assert_eq!(o.parent(2), Some(1));
        assert_eq!(o.parent(4), Some(3));
        assert!(o.max_out_degree() <= 1 && o.is_acyclic());
        assert!(Orientation::rooted_forest(&clique(3)).is_err());
    }
}
