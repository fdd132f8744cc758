use std::collections::HashMap;

use privlabel_graph::{EdgeId, Graph, LabelDomain};

use crate::verdict::{DefectCheck, Verdict, Witness};

/// No two edges sharing an endpoint have the same color.
pub fn check_edge_properness(g: &Graph, colors: &[Option<u64>]) -> Verdict {
    if let Some(e) = (0..g.m()).find(|&e| colors.get(e).copied().flatten().is_none()) {
        return Verdict::Incomplete { entity: e };
    }
    let assignment: Vec<(EdgeId, u64)> = (0..g.m()).map(|e| (e, colors[e].unwrap())).collect();
    check_partial_edge_properness(g, &assignment)
}

/// Properness of a coloring of some of the edges.
pub fn check_partial_edge_properness(g: &Graph, assignment: &[(EdgeId, u64)]) -> Verdict {
    let mut at: HashMap<(usize, u64), EdgeId> = HashMap::with_capacity(2 * assignment.len());
    for &(e, color) in assignment {
        if e >= g.m() {
            return Verdict::fail(Witness::EdgeOutOfRange { edge: e });
        }
        let (u, v) = g.edge(e);
        for w in [u, v] {
            if let Some(&other) = at.get(&(w, color)) {
                if other != e {
                    return Verdict::fail(Witness::AdjacentEdges { a: other, b: e, color });
                }
            }
            at.insert((w, color), e);
        }
    }
    Verdict::Pass
}

/// Edges sharing an endpoint must have disjoint domains.
pub fn check_edge_domains_disjoint(g: &Graph, domains: &LabelDomain) -> Verdict {
    if let Some(e) = (0..g.m()).find(|&e| domains.domain(e).is_empty()) {
        return Verdict::Degenerate { entity: e };
    }
    for v in 0..g.n() {
        let mut owner: HashMap<u64, EdgeId> = HashMap::new();
        for &e in g.incident_edges(v) {
            for &x in domains.domain(e) {
                if let Some(f) = owner.insert(x, e) {
                    return Verdict::fail(Witness::SharedLabel { a: f, b: e, label: x });
                }
            }
        }
    }
    Verdict::Pass
}

/// Every edge has at most `p` adjacent edges of its own color.
pub fn check_edge_defect(g: &Graph, colors: &[u64], p: usize) -> DefectCheck {
    let mut count: HashMap<(usize, u64), usize> = HashMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        *count.entry((u, colors[e])).or_default() += 1;
        *count.entry((v, colors[e])).or_default() += 1;
    }
    let mut worst = (0, 0);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let defect = count[&(u, colors[e])] + count[&(v, colors[e])] - 2;
        if defect > worst.0 {
            worst = (defect, e);
        }
    }
    let verdict = if worst.0 > p {
        Verdict::fail(Witness::Defect { entity: worst.1, label: colors[worst.1], count: worst.0 })
    } else {
        Verdict::Pass
    };
    DefectCheck { verdict, max_defect: worst.0 }
}

fn covered(g: &Graph, set: &[EdgeId]) -> Result<Vec<bool>, Verdict> {
    let mut touched = vec![false; g.n()];
    for &e in set {
        if e >= g.m() {
            return Err(Verdict::fail(Witness::EdgeOutOfRange { edge: e }));
        }
        let (u, v) = g.edge(e);
        touched[u] = true;
        touched[v] = true;
    }
    Ok(touched)
}

/// Every edge is in `d` or shares an endpoint with an edge of `d`.
pub fn check_edge_dominating(g: &Graph, d: &[EdgeId]) -> Verdict {
    let touched = match covered(g, d) {
        Ok(t) => t,
        Err(v) => return v,
    };
    match g.edges().iter().position(|&(u, v)| !touched[u] && !touched[v]) {
        Some(edge) => Verdict::fail(Witness::Undominated { edge }),
        None => Verdict::Pass,
    }
}

/// No two edges of `set` share an endpoint.
pub fn check_matching(g: &Graph, set: &[EdgeId]) -> Verdict {
    let assignment: Vec<(EdgeId, u64)> = set.iter().map(|&e| (e, 0)).collect();
    check_partial_edge_properness(g, &assignment)
}

/// A matching to which no edge can be added.
pub fn check_maximal_matching(g: &Graph, set: &[EdgeId]) -> Verdict {
    check_matching(g, set).and(|| match check_edge_dominating(g, set) {
        Verdict::Fail { witness: Witness::Undominated { edge } } => Verdict::fail(Witness::NotMaximal { edge }),
        other => other,
    })
}
