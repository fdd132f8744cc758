use crate::graph::{EdgeId, Graph, VertexId};

/// Builds L(G): vertex `e` of the result is edge `e` of `g`, and two vertices
/// are adjacent iff the edges share an endpoint.
///
/// The returned mapping sends each edge index of `g` to its line-graph vertex.
/// It is the identity, but callers should go through it rather than rely on
/// that.
pub fn line_graph(g: &Graph) -> (Graph, Vec<VertexId>) {
    let mut pairs = Vec::new();
    for v in 0..g.n() {
        let inc: &[EdgeId] = g.incident_edges(v);
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                pairs.push((a, b));
            }
        }
    }
    // In a simple graph two edges share at most one endpoint, so no pair is
    // produced twice; from_edges dedups anyway.
    let lg = Graph::from_edges(g.m(), pairs).expect("edge indices are in range");
    (lg, (0..g.m()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_self_dual() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let (lg, map) = line_graph(&g);
        assert_eq!((lg.n(), lg.m()), (3, 3));
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn two_edge_path_gives_single_edge() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let (lg, _) = line_graph(&g);
        assert_eq!(lg.edges(), &[(0, 1)]);
    }

    #[test]
    fn star_gives_triangle() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let (lg, _) = line_graph(&g);
        // Every pair of star edges meets at the center.
        for a in 0..3 {
            for b in 0..3 {
                let (ea, eb) = (g.edge(a), g.edge(b));
                let share = ea.0 == eb.0 || ea.0 == eb.1 || ea.1 == eb.0 || ea.1 == eb.1;
                assert_eq!(a != b && share, lg.has_edge(a, b));
            }
        }
        assert_eq!(lg.m(), 3);
    }
}
