use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorKind {
    Clique {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// Uniform random recursive tree, optionally with a degree cap, relabeled
    /// by a random permutation.
    RandomTree {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_degree: Option<usize>,
    },
    /// Erdős–Rényi G(n, p). With `max_degree`, sampled pairs are inserted in
    /// random order and skipped once an endpoint reaches the cap.
    Gnp {
        n: usize,
        p: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_degree: Option<usize>,
    },
    /// Union of `forests` random spanning trees.
    ForestUnion {
        n: usize,
        forests: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub kind: GeneratorKind,
    #[serde(default)]
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, seed: u64) -> Self {
        GeneratorSpec { kind, seed }
    }
}

/// A generated graph together with what its construction certifies.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    /// Upper bound on the arboricity known from the construction.
    pub arboricity: Option<usize>,
    /// The generating forests of a forest union, as canonical pairs.
    pub forests: Vec<Vec<(VertexId, VertexId)>>,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let plain = |graph: Graph, arboricity| Generated { graph, arboricity, forests: Vec::new() };
    match spec.kind {
        GeneratorKind::Clique { n } => {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Ok(plain(Graph::from_edges(n, pairs)?, None))
        }
        GeneratorKind::Path { n } => {
            let pairs = (1..n).map(|v| (v - 1, v));
            Ok(plain(Graph::from_edges(n, pairs)?, Some(1)))
        }
        GeneratorKind::RandomTree { n, max_degree } => {
            let edges = random_tree(n, max_degree, &mut rng)?;
            Ok(plain(Graph::from_edges(n, edges)?, Some(1)))
        }
        GeneratorKind::Gnp { n, p, max_degree } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(GraphError::InvalidProbability(p));
            }
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen::<f64>() < p {
                        pairs.push((u, v));
                    }
                }
            }
            if let Some(cap) = max_degree {
                pairs.shuffle(&mut rng);
                let mut degree = vec![0usize; n];
                pairs.retain(|&(u, v)| {
                    let ok = degree[u] < cap && degree[v] < cap;
                    if ok {
                        degree[u] += 1;
                        degree[v] += 1;
                    }
                    ok
                });
            }
            Ok(plain(Graph::from_edges(n, pairs)?, None))
        }
        GeneratorKind::ForestUnion { n, forests } => {
            if forests == 0 {
                return Err(GraphError::InvalidParameter("forest-union needs forests >= 1".into()));
            }
            let mut all = Vec::new();
            let mut parts = Vec::with_capacity(forests);
            for _ in 0..forests {
                let mut tree = random_tree(n, None, &mut rng)?;
                for e in tree.iter_mut() {
                    *e = (e.0.min(e.1), e.0.max(e.1));
                }
                tree.sort_unstable();
                all.extend_from_slice(&tree);
                parts.push(tree);
            }
            let graph = Graph::from_edges(n, all)?;
            Ok(Generated { graph, arboricity: Some(forests), forests: parts })
        }
    }
}

fn random_tree(
    n: usize,
    max_degree: Option<usize>,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(VertexId, VertexId)>> {
    let cap = max_degree.unwrap_or(usize::MAX);
    if n > 2 && cap < 2 || n == 2 && cap < 1 {
        return Err(GraphError::InvalidParameter(format!(
            "a tree on {n} vertices cannot have max degree {cap}"
        )));
    }
    let mut label: Vec<VertexId> = (0..n).collect();
    label.shuffle(rng);
    let mut degree = vec![0usize; n];
    // Vertices (in construction order) that can still take a child.
    let mut open: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n {
        if i > 0 {
            let slot = rng.gen_range(0..open.len());
            let parent = open[slot];
            edges.push((label[parent], label[i]));
            degree[parent] += 1;
            degree[i] += 1;
            if degree[parent] >= cap {
                open.swap_remove(slot);
            }
        }
        if degree[i] < cap {
            open.push(i);
        }
    }
    Ok(edges)
}
