//! Exhaustive enumeration of small graphs, one representative per
//! isomorphism class.

use crate::graph::{Graph, VertexId};

/// Isomorphism test by backtracking over vertex maps, pruned by degree.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    extend(g, h, 0, &mut map, &mut used)
}

fn extend(g: &Graph, h: &Graph, v: VertexId, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            used[w] = true;
            if extend(g, h, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    false
}

fn insert_new(classes: &mut Vec<Graph>, g: Graph) {
    if !classes.iter().any(|h| are_isomorphic(h, &g)) {
        classes.push(g);
    }
}

fn with_edge(g: &Graph, n: usize, a: VertexId, b: VertexId) -> Graph {
    Graph::from_edges(n, g.edges().iter().copied().chain([(a, b)])).expect("valid edge")
}

/// One graph per isomorphism class on exactly `n` vertices.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(n)];
    let mut all = level.clone();
    for _ in 0..n * n.saturating_sub(1) / 2 {
        let mut next = Vec::new();
        for g in &level {
            for a in 0..n {
                for b in a + 1..n {
                    if !g.has_edge(a, b) {
                        insert_new(&mut next, with_edge(g, n, a, b));
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// One graph per isomorphism class with `1..=max_m` edges and no isolated
/// vertices.
pub fn graphs_with_edges_up_to(max_m: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    let mut all = Vec::new();
    for _ in 0..max_m {
        let mut next = Vec::new();
        for g in &level {
            let n = g.n();
            for a in 0..n {
                for b in a + 1..n {
                    if !g.has_edge(a, b) {
                        insert_new(&mut next, with_edge(g, n, a, b));
                    }
                }
                insert_new(&mut next, with_edge(g, n + 1, a, n));
            }
            insert_new(&mut next, with_edge(g, n + 2, n, n + 1));
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // numbers of graphs on n unlabeled vertices
        let counts: Vec<usize> = (1..=5).map(|n| graphs_on(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn edge_count_classes() {
        // graphs without isolated vertices by number of edges: 1, 2, 5, 11
        let graphs = graphs_with_edges_up_to(4);
        let per_m: Vec<usize> = (1..=4).map(|m| graphs.iter().filter(|g| g.m() == m).count()).collect();
        assert_eq!(per_m, vec![1, 2, 5, 11]);
        assert!(graphs.iter().all(|g| (0..g.n()).all(|v| g.degree(v) > 0)));
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p4b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(!are_isomorphic(&p4, &star));
        assert!(are_isomorphic(&p4, &p4b));
    }
}
