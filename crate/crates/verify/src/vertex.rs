use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use privlabel_graph::{ClusterLabel, ForestLabeling, Graph, LabelDomain, VertexId};

use crate::search::{bit_parallel_bfs, UnionFind, BATCH};
use crate::verdict::{DefectCheck, NetworkCheck, Verdict, Witness};

/// Largest number of joint selections the exhaustive sweep will enumerate.
pub const SWEEP_LIMIT: u64 = 1 << 20;

pub fn check_proper_vertex(g: &Graph, labels: &[Option<u64>]) -> Verdict {
    if let Some(v) = (0..g.n()).find(|&v| labels.get(v).copied().flatten().is_none()) {
        return Verdict::Incomplete { entity: v };
    }
    for &(u, v) in g.edges() {
        if labels[u] == labels[v] {
            return Verdict::fail(Witness::MonochromaticEdge { u, v, label: labels[u].unwrap() });
        }
    }
    Verdict::Pass
}

fn first_common(a: &[u64], b: &[u64]) -> Option<u64> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

/// Enumerates every joint selection (one label per vertex) and checks each
/// for properness. `None` when the number of selections exceeds
/// [`SWEEP_LIMIT`] or a domain is empty; otherwise the first improper
/// selection, if any.
pub fn exhaustive_selection_sweep(g: &Graph, domains: &LabelDomain) -> Option<Result<(), Vec<u64>>> {
    let sizes = domains.sizes();
    let mut total: u64 = 1;
    for &s in &sizes {
        if s == 0 {
            return None;
        }
        total = total.checked_mul(s as u64).filter(|&t| t <= SWEEP_LIMIT)?;
    }
    let mut index = vec![0usize; g.n()];
    let mut selection: Vec<Option<u64>> = (0..g.n()).map(|v| Some(domains.domain(v)[0])).collect();
    loop {
        if !check_proper_vertex(g, &selection).passed() {
            return Some(Err(selection.into_iter().map(Option::unwrap).collect()));
        }
        let mut v = 0;
        loop {
            if v == g.n() {
                return Some(Ok(()));
            }
            index[v] += 1;
            if index[v] < sizes[v] {
                selection[v] = Some(domains.domain(v)[index[v]]);
                break;
            }
            index[v] = 0;
            selection[v] = Some(domains.domain(v)[0]);
            v += 1;
        }
    }
}

/// Adjacent vertices must have disjoint domains, so that any selection is a
/// proper coloring. Small instances are also swept exhaustively and the two
/// answers compared.
pub fn check_domains_disjoint(g: &Graph, domains: &LabelDomain) -> Verdict {
    if let Some(v) = (0..g.n()).find(|&v| domains.domain(v).is_empty()) {
        return Verdict::Degenerate { entity: v };
    }
    let mut verdict = Verdict::Pass;
    for &(u, v) in g.edges() {
        if let Some(label) = first_common(domains.domain(u), domains.domain(v)) {
            verdict = Verdict::fail(Witness::SharedLabel { a: u, b: v, label });
            break;
        }
    }
    if g.n() <= 8 {
        if let Some(sweep) = exhaustive_selection_sweep(g, domains) {
            match (verdict.passed(), sweep) {
                (true, Err(selection)) => return Verdict::fail(Witness::SweepDisagrees { selection }),
                (false, Ok(())) => return Verdict::fail(Witness::SweepDisagrees { selection: vec![] }),
                _ => {}
            }
        }
    }
    verdict
}

/// Every vertex has at most `p` neighbors with its label.
pub fn check_defective_labels(g: &Graph, labels: &[u64], p: usize) -> DefectCheck {
    let mut worst: Option<(usize, usize)> = None;
    for v in 0..g.n() {
        let count = g.neighbors(v).iter().filter(|&&u| labels[u] == labels[v]).count();
        if worst.map_or(true, |(c, _)| count > c) {
            worst = Some((count, v));
        }
    }
    let (max_defect, v) = worst.unwrap_or((0, 0));
    let verdict = if max_defect > p {
        Verdict::fail(Witness::Defect { entity: v, label: labels[v], count: max_defect })
    } else {
        Verdict::Pass
    };
    DefectCheck { verdict, max_defect }
}

/// Worst case over selections: for every vertex `v` and label `x` in its
/// domain, at most `p` neighbors may also hold `x`.
pub fn check_defective_domains(g: &Graph, domains: &LabelDomain, p: usize) -> DefectCheck {
    let worst = (0..g.n())
        .into_par_iter()
        .flat_map_iter(|v| {
            domains.domain(v).iter().map(move |&x| {
                let count = g.neighbors(v).iter().filter(|&&u| domains.domain(u).binary_search(&x).is_ok()).count();
                (count, std::cmp::Reverse(v), x)
            })
        })
        .max();
    if let Some(v) = (0..g.n()).find(|&v| domains.domain(v).is_empty()) {
        return DefectCheck { verdict: Verdict::Degenerate { entity: v }, max_defect: 0 };
    }
    let (max_defect, v, x) = worst.map(|(c, r, x)| (c, r.0, x)).unwrap_or((0, 0, 0));
    let verdict = if max_defect > p {
        Verdict::fail(Witness::Defect { entity: v, label: x, count: max_defect })
    } else {
        Verdict::Pass
    };
    DefectCheck { verdict, max_defect }
}

/// Every label class must be a forest and every vertex must use distinct
/// labels on its out-edges.
pub fn check_forest_labeling(g: &Graph, labeling: &ForestLabeling) -> Verdict {
    if labeling.edge_labels.len() != g.m() || labeling.sources.len() != g.m() {
        let missing = labeling.edge_labels.len().min(labeling.sources.len());
        return Verdict::Incomplete { entity: missing };
    }
    for e in 0..g.m() {
        let (u, v) = g.edge(e);
        let label = labeling.edge_labels[e];
        if label == 0 || label > labeling.forest_count {
            return Verdict::fail(Witness::EdgeOutOfRange { edge: e });
        }
        if labeling.sources[e] != u && labeling.sources[e] != v {
            return Verdict::fail(Witness::BadSource { edge: e });
        }
    }
    for v in 0..g.n() {
        let mut used = HashMap::new();
        for &e in g.incident_edges(v) {
            if labeling.sources[e] == v && used.insert(labeling.edge_labels[e], e).is_some() {
                return Verdict::fail(Witness::RepeatedOutLabel { vertex: v, class: labeling.edge_labels[e] });
            }
        }
    }
    let mut forests: Vec<UnionFind> = (0..labeling.forest_count).map(|_| UnionFind::new(g.n())).collect();
    for e in 0..g.m() {
        let (u, v) = g.edge(e);
        let class = labeling.edge_labels[e];
        if !forests[class - 1].union(u, v) {
            return Verdict::fail(Witness::Cycle { class, edge: e });
        }
    }
    Verdict::Pass
}

/// Per label, the greatest distance between two holders, with a witness
/// pair. `None` distance means two holders are disconnected.
type Spread = (Option<usize>, VertexId, VertexId);

fn label_spreads(g: &Graph, holders: &BTreeMap<u64, Vec<VertexId>>, domains: &LabelDomain) -> BTreeMap<u64, Spread> {
    let sources: Vec<(u64, VertexId)> =
        holders.iter().flat_map(|(&x, vs)| vs.iter().map(move |&v| (x, v))).collect();
    let partial: Vec<Vec<(u64, Spread)>> = sources
        .par_chunks(BATCH)
        .map(|batch| {
            // bits of the batch holding each label
            let mut masks: Vec<(u64, u64)> = Vec::new();
            for (b, &(x, _)) in batch.iter().enumerate() {
                match masks.last_mut() {
                    Some((y, m)) if *y == x => *m |= 1 << b,
                    _ => masks.push((x, 1 << b)),
                }
            }
            let mut far: Vec<Spread> = masks.iter().map(|_| (Some(0), batch[0].1, batch[0].1)).collect();
            let vertices: Vec<VertexId> = batch.iter().map(|&(_, v)| v).collect();
            let seen = bit_parallel_bfs(g, &vertices, |v, depth, bits| {
                for (k, &(x, m)) in masks.iter().enumerate() {
                    if bits & m != 0 && domains.domain(v).binary_search(&x).is_ok() {
                        let src = batch[(bits & m).trailing_zeros() as usize].1;
                        far[k] = (Some(depth), src, v);
                    }
                }
            });
            for (k, &(x, m)) in masks.iter().enumerate() {
                if let Some(&h) = holders[&x].iter().find(|&&h| seen[h] & m != m) {
                    let src = batch[(!seen[h] & m).trailing_zeros() as usize].1;
                    far[k] = (None, src, h);
                }
            }
            masks.iter().map(|&(x, _)| x).zip(far).collect()
        })
        .collect();
    let mut spreads: BTreeMap<u64, Spread> = BTreeMap::new();
    for (x, s) in partial.into_iter().flatten() {
        let entry = spreads.entry(x).or_insert(s);
        let worse = match (s.0, entry.0) {
            (None, Some(_)) => true,
            (Some(a), Some(b)) => a > b,
            _ => false,
        };
        if worse {
            *entry = s;
        }
    }
    spreads
}

/// Holders of every label must lie within `diameter_bound` of each other in
/// `g`, every vertex must hold the same number of labels, and at most
/// `label_budget` distinct labels may be used.
pub fn check_network_decomposition(
    g: &Graph,
    domains: &LabelDomain,
    diameter_bound: usize,
    label_budget: usize,
) -> NetworkCheck {
    let mut holders: BTreeMap<u64, Vec<VertexId>> = BTreeMap::new();
    for v in 0..g.n() {
        for &x in domains.domain(v) {
            holders.entry(x).or_default().push(v);
        }
    }
    let distinct_labels = holders.len();
    let spreads = label_spreads(g, &holders, domains);
    let mut max_weak_diameter = Some(0);
    let mut far: Option<(u64, Spread)> = None;
    for (&x, &s) in &spreads {
        let beyond = match s.0 {
            None => true,
            Some(d) => d > diameter_bound,
        };
        if beyond && far.is_none() {
            far = Some((x, s));
        }
        max_weak_diameter = match (max_weak_diameter, s.0) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
    }

    let expected = if g.n() == 0 { 0 } else { domains.domain(0).len() };
    let verdict = if let Some(v) = (0..g.n()).find(|&v| domains.domain(v).is_empty()) {
        Verdict::Degenerate { entity: v }
    } else if let Some(v) = (0..g.n()).find(|&v| domains.domain(v).len() != expected) {
        Verdict::fail(Witness::NonUniformDomain { vertex: v, size: domains.domain(v).len(), expected })
    } else if let Some((label, (distance, u, v))) = far {
        Verdict::fail(Witness::FarApart { label, u, v, distance })
    } else if distinct_labels > label_budget {
        Verdict::fail(Witness::TooManyLabels { count: distinct_labels, budget: label_budget })
    } else {
        Verdict::Pass
    };
    NetworkCheck { verdict, max_weak_diameter, distinct_labels }
}

/// Cluster labels `(run, phase, center)`: adjacent vertices in different
/// clusters of one run must be in different phases, so that `(run, phase)`
/// properly colors every run's cluster graph.
pub fn check_cluster_coloring(g: &Graph, clusters: &LabelDomain) -> Verdict {
    let n = g.n();
    let decode = |v: VertexId| -> BTreeMap<u32, ClusterLabel> {
        clusters
            .domain(v)
            .iter()
            .map(|&x| ClusterLabel::decode(x, n, clusters.stride()))
            .map(|l| (l.run, l))
            .collect()
    };
    let decoded: Vec<BTreeMap<u32, ClusterLabel>> = (0..n).map(decode).collect();
    for &(u, v) in g.edges() {
        for (run, a) in &decoded[u] {
            if let Some(b) = decoded[v].get(run) {
                if a != b && a.phase == b.phase {
                    let label = clusters.domain(u).iter().copied().find(|&x| ClusterLabel::decode(x, n, clusters.stride()) == *a);
                    return Verdict::fail(Witness::MonochromaticEdge { u, v, label: label.unwrap_or(0) });
                }
            }
        }
    }
    Verdict::Pass
}

/// Every vertex has at most `threshold` neighbors in its own or a later
/// layer. Layers are numbered from 1.
pub fn check_h_partition(g: &Graph, layers: &[usize], threshold: usize) -> DefectCheck {
    if let Some(v) = (0..g.n()).find(|&v| layers.get(v).map_or(true, |&l| l == 0)) {
        return DefectCheck { verdict: Verdict::Incomplete { entity: v }, max_defect: 0 };
    }
    let mut worst = (0, 0);
    for v in 0..g.n() {
        let later = g.neighbors(v).iter().filter(|&&u| layers[u] >= layers[v]).count();
        if later > worst.0 {
            worst = (later, v);
        }
    }
    let verdict = if worst.0 > threshold {
        Verdict::fail(Witness::Defect { entity: worst.1, label: layers[worst.1] as u64, count: worst.0 })
    } else {
        Verdict::Pass
    };
    DefectCheck { verdict, max_defect: worst.0 }
}
