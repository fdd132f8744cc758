use std::collections::VecDeque;

use privlabel_graph::{Graph, VertexId};

/// Hop distances from `source`; `usize::MAX` for unreachable vertices.
pub fn bfs_distances(g: &Graph, source: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Disjoint sets with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Sources searched together, one bit each.
pub(crate) const BATCH: usize = 64;

/// Breadth-first search from up to 64 sources at once. Calls
/// `on_reach(v, depth, bits)` with the sources reaching `v` for the first
/// time at `depth`; returns the final reach mask of every vertex.
pub(crate) fn bit_parallel_bfs(
    g: &Graph,
    sources: &[VertexId],
    mut on_reach: impl FnMut(VertexId, usize, u64),
) -> Vec<u64> {
    assert!(sources.len() <= BATCH);
    let n = g.n();
    let mut seen = vec![0u64; n];
    let mut frontier = vec![0u64; n];
    for (b, &s) in sources.iter().enumerate() {
        seen[s] |= 1 << b;
        frontier[s] |= 1 << b;
    }
    for v in 0..n {
        if frontier[v] != 0 {
            on_reach(v, 0, frontier[v]);
        }
    }
    let mut next = vec![0u64; n];
    let mut depth = 0;
    loop {
        depth += 1;
        let mut any = false;
        for v in 0..n {
            let incoming = g.neighbors(v).iter().fold(0u64, |acc, &u| acc | frontier[u]);
            let fresh = incoming & !seen[v];
            next[v] = fresh;
            any |= fresh != 0;
        }
        if !any {
            return seen;
        }
        for v in 0..n {
            if next[v] != 0 {
                seen[v] |= next[v];
                on_reach(v, depth, next[v]);
            }
        }
        std::mem::swap(&mut frontier, &mut next);
    }
}
