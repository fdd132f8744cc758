use crate::error::{GraphError, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Simple undirected graph on dense vertex IDs `0..n`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted
/// lexicographically; the position in that list is the edge index.
/// Adjacency lists are sorted and aligned with the per-vertex incident edge
/// lists, so `neighbors(v)[k]` is the far endpoint of `incident_edges(v)[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    incident: Vec<Vec<EdgeId>>,
    edges: Vec<(VertexId, VertexId)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            incident: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from unordered pairs. Duplicates (in either
    /// orientation) collapse to one edge.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut edges = Vec::new();
        for (index, (a, b)) in pairs.into_iter().enumerate() {
            if a == b {
                return Err(GraphError::SelfLoop { line: index + 1, vertex: a });
            }
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { line: index + 1, vertex: x, n });
                }
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_canonical(n, edges))
    }

    fn from_canonical(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        // Lexicographic edge order makes every list come out sorted: a vertex
        // first sees its lower neighbors (as `v`), then its higher ones (as `u`).
        for (e, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            incident[u].push(e);
            adjacency[v].push(u);
            incident[v].push(e);
        }
        Graph { adjacency, incident, edges }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edge_id(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let list = self.adjacency.get(a)?;
        list.binary_search(&b).ok().map(|pos| self.incident[a][pos])
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_id(a, b).is_some()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Spanning subgraph keeping only the listed edges. Edge indices of the
    /// result are renumbered; the returned vector maps them back.
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let mut kept: Vec<EdgeId> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let pairs = kept.iter().map(|&e| self.edges[e]).collect();
        (Self::from_canonical(self.n(), pairs), kept)
    }
}
