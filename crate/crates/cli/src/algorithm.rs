//! Algorithm tags, their parameter schemas, and execution with the matching
//! checkers.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};

use privlabel_core::decomposition::{
    arboricity_generic_coloring_unchecked, default_radius_cap, forest_decomposition, generic_network_decomposition,
    h_partition, linial_saks, default_phase_budget, ForestMode,
};
use privlabel_core::edge::{
    default_subroutine_rounds, dominating_edge_coloring, edge_coloring_via_line_graph, kuhn_defective_edge_coloring,
    maximal_matching, simple_edge_coloring, LineGraphVariant,
};
use privlabel_core::vertex::{
    cole_vishkin_3coloring, expand_to_generic, generic_defective_coloring, generic_delta2_coloring,
    generic_random_coloring_unchecked, log_star,
};
use privlabel_core::{derive_seed, verify_cover_free, CheckMode, Error, PolyFamily, RunStats};
use privlabel_graph::{ClusterLabel, EntityKind, Graph, LabelDomain, Orientation};
use privlabel_verify::{
    check_cluster_coloring, check_defective_domains, check_domains_disjoint, check_edge_defect,
    check_edge_domains_disjoint, check_edge_dominating, check_edge_properness, check_forest_labeling,
    check_h_partition, check_matching, check_maximal_matching, check_network_decomposition,
    check_partial_edge_properness, check_proper_vertex, NamedVerdict, Verdict, Witness,
};

use crate::config::{ConfigError, ConfigResult, LoadedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Cv3Delta,
    RandomColoring,
    Delta2Coloring,
    DefectiveColoring,
    ArboricityColoring,
    NetworkDecomposition,
    ForestId,
    ForestHPartition,
    EdgeRandom,
    EdgeDelta2,
    KuhnDefectiveEdge,
    DominatingEdgeColoring,
    LinialSaks,
    HPartition,
    SimpleEdgeColoring,
    MaximalMatching,
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    Int,
    Float,
}

#[derive(Clone, Copy, Debug)]
enum Default {
    Value(f64),
    /// `⌈2·log₂ n⌉`
    RadiusCap,
    /// Known arboricity of a generated forest union.
    Arboricity,
    CvRounds,
    SubroutineRounds,
}

struct ParamSpec {
    key: &'static str,
    kind: Kind,
    default: Default,
}

const fn param(key: &'static str, kind: Kind, default: Default) -> ParamSpec {
    ParamSpec { key, kind, default }
}

const C: ParamSpec = param("c", Kind::Float, Default::Value(4.0));
const C_INT: ParamSpec = param("c", Kind::Int, Default::Value(4.0));
const EPS: ParamSpec = param("eps", Kind::Float, Default::Value(1.0));
const A: ParamSpec = param("a", Kind::Int, Default::Arboricity);
const B: ParamSpec = param("B", Kind::Int, Default::RadiusCap);
const P: ParamSpec = param("p", Kind::Int, Default::Value(1.0));
const I: ParamSpec = param("i", Kind::Int, Default::Value(1.0));
const T: ParamSpec = param("t", Kind::Int, Default::Value(3.0));
const CV_ROUNDS: ParamSpec = param("max_rounds", Kind::Int, Default::CvRounds);
const MAX_ROUNDS: ParamSpec = param("max_rounds", Kind::Int, Default::SubroutineRounds);

impl Algorithm {
    pub const ALL: [Algorithm; 16] = [
        Algorithm::Cv3Delta,
        Algorithm::RandomColoring,
        Algorithm::Delta2Coloring,
        Algorithm::DefectiveColoring,
        Algorithm::ArboricityColoring,
        Algorithm::NetworkDecomposition,
        Algorithm::ForestId,
        Algorithm::ForestHPartition,
        Algorithm::EdgeRandom,
        Algorithm::EdgeDelta2,
        Algorithm::KuhnDefectiveEdge,
        Algorithm::DominatingEdgeColoring,
        Algorithm::LinialSaks,
        Algorithm::HPartition,
        Algorithm::SimpleEdgeColoring,
        Algorithm::MaximalMatching,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Cv3Delta => "cv-3delta",
            Algorithm::RandomColoring => "random-coloring",
            Algorithm::Delta2Coloring => "delta2-coloring",
            Algorithm::DefectiveColoring => "defective-coloring",
            Algorithm::ArboricityColoring => "arboricity-coloring",
            Algorithm::NetworkDecomposition => "network-decomposition",
            Algorithm::ForestId => "forest-id",
            Algorithm::ForestHPartition => "forest-hpartition",
            Algorithm::EdgeRandom => "edge-random",
            Algorithm::EdgeDelta2 => "edge-delta2",
            Algorithm::KuhnDefectiveEdge => "kuhn-defective-edge",
            Algorithm::DominatingEdgeColoring => "dominating-edge-coloring",
            Algorithm::LinialSaks => "linial-saks",
            Algorithm::HPartition => "h-partition",
            Algorithm::SimpleEdgeColoring => "simple-edge-coloring",
            Algorithm::MaximalMatching => "maximal-matching",
        }
    }

    pub fn from_tag(tag: &str) -> ConfigResult<Algorithm> {
        // a few long-form aliases
        let tag = match tag {
            "generic-random-coloring" => "random-coloring",
            "generic-delta2-coloring" => "delta2-coloring",
            "generic-defective-coloring" => "defective-coloring",
            other => other,
        };
        Algorithm::ALL.into_iter().find(|a| a.tag() == tag).ok_or_else(|| ConfigError::UnknownAlgorithm {
            name: tag.to_string(),
            known: Algorithm::ALL.iter().map(|a| a.tag()).collect::<Vec<_>>().join(", "),
        })
    }

    fn schema(self) -> &'static [ParamSpec] {
        match self {
            Algorithm::Cv3Delta => &[CV_ROUNDS],
            Algorithm::RandomColoring | Algorithm::EdgeRandom => &[C],
            Algorithm::Delta2Coloring | Algorithm::EdgeDelta2 | Algorithm::ForestId => &[],
            Algorithm::DefectiveColoring => &[P],
            Algorithm::ArboricityColoring => &[A, C, EPS],
            Algorithm::NetworkDecomposition => &[B, C_INT],
            Algorithm::ForestHPartition | Algorithm::HPartition => &[A, EPS],
            Algorithm::KuhnDefectiveEdge => &[I],
            Algorithm::DominatingEdgeColoring => &[C_INT, T],
            Algorithm::LinialSaks => &[B],
            Algorithm::SimpleEdgeColoring => &[C, MAX_ROUNDS],
            Algorithm::MaximalMatching => &[MAX_ROUNDS],
        }
    }

    /// How the round count is measured.
    pub fn round_kind(self) -> &'static str {
        match self {
            Algorithm::EdgeRandom
            | Algorithm::EdgeDelta2
            | Algorithm::SimpleEdgeColoring
            | Algorithm::MaximalMatching => "line-graph",
            Algorithm::DominatingEdgeColoring => "substitute-subroutine",
            _ => "simulated",
        }
    }

    /// Checks the raw parameters against the schema and fills in defaults.
    pub fn resolve(self, raw: &BTreeMap<String, String>, input: &LoadedGraph) -> ConfigResult<Params> {
        let schema = self.schema();
        if let Some(key) = raw.keys().find(|k| !schema.iter().any(|s| s.key == k.as_str())) {
            return Err(ConfigError::UnknownParameter {
                algorithm: self.tag(),
                key: key.clone(),
                accepted: if schema.is_empty() {
                    "none".into()
                } else {
                    schema.iter().map(|s| s.key).collect::<Vec<_>>().join(", ")
                },
            });
        }
        let g = &input.graph;
        let mut values = BTreeMap::new();
        for spec in schema {
            let invalid = |reason: String| ConfigError::InvalidValue { key: spec.key.to_string(), reason };
            let value = match (raw.get(spec.key), spec.kind) {
                (Some(text), Kind::Int) => {
                    json!(text.parse::<u64>().map_err(|_| invalid(format!("expected a non-negative integer, got `{text}`")))?)
                }
                (Some(text), Kind::Float) => {
                    let x = text.parse::<f64>().map_err(|_| invalid(format!("expected a number, got `{text}`")))?;
                    if !(x.is_finite() && x > 0.0) {
                        return Err(invalid(format!("must be positive, got `{text}`")));
                    }
                    json!(x)
                }
                (None, kind) => {
                    let x = match spec.default {
                        Default::Value(x) => x,
                        Default::RadiusCap => default_radius_cap(g.n()) as f64,
                        Default::CvRounds => (10 * (log_star(g.n()) + 10)) as f64,
                        Default::SubroutineRounds => default_subroutine_rounds(g.m()) as f64,
                        Default::Arboricity => match input.arboricity {
                            Some(a) => a as f64,
                            None => return Err(ConfigError::MissingParameter { algorithm: self.tag(), key: spec.key }),
                        },
                    };
                    match kind {
                        Kind::Int => json!(x as u64),
                        Kind::Float => json!(x),
                    }
                }
            };
            values.insert(spec.key.to_string(), value);
        }
        Ok(Params { values })
    }
}

/// Resolved parameters, echoed into reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Params {
    pub values: BTreeMap<String, Value>,
}

impl Params {
    fn float(&self, key: &str) -> f64 {
        self.values[key].as_f64().expect("schema float")
    }

    fn int(&self, key: &str) -> usize {
        self.values[key].as_u64().expect("schema int") as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundSummary {
    pub count: usize,
    pub kind: &'static str,
    pub messages: u64,
    pub complete: bool,
}

impl RoundSummary {
    fn from_stats(stats: RunStats, kind: &'static str) -> Self {
        RoundSummary { count: stats.rounds, kind, messages: stats.messages, complete: stats.complete }
    }
}

/// What the table of known results predicts for a run, where it is exact
/// enough to compare.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub solution_domain_min: Option<u64>,
    #[serde(serialize_with = "privlabel_verify::ratio_text")]
    pub contingency_factor: Option<Ratio<u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Execution {
    pub rounds: RoundSummary,
    pub domains: Option<LabelDomain>,
    /// Problem domain size the metrics are taken against.
    pub declared_palette: Option<u64>,
    pub verdicts: Vec<NamedVerdict>,
    pub expected: Option<Expectation>,
    pub details: Value,
}

fn reject(algorithm: Algorithm, e: Error) -> ConfigError {
    ConfigError::Rejected { algorithm: algorithm.tag(), reason: e.to_string() }
}

fn incomplete(algorithm: Algorithm, rounds: usize, details: Value) -> Execution {
    Execution {
        rounds: RoundSummary { count: rounds, kind: algorithm.round_kind(), messages: 0, complete: false },
        domains: None,
        declared_palette: None,
        verdicts: Vec::new(),
        expected: None,
        details,
    }
}

fn named(name: &str, verdict: Verdict) -> NamedVerdict {
    NamedVerdict::new(name, verdict)
}

fn log2_ceil(n: usize) -> usize {
    (n.max(1) as f64).log2().ceil() as usize
}

/// Sampled check of the final quadratic family used by a reduction.
fn family_verdict(q: u64, delta: usize, rho: usize, seed: u64) -> Verdict {
    let Ok(family) = PolyFamily::new(2, q) else {
        return Verdict::Degenerate { entity: 0 };
    };
    if delta == 0 {
        return Verdict::Pass;
    }
    match verify_cover_free(&family, delta, rho, CheckMode::Sampled { trials: 1000, seed }) {
        Ok(v) if v.holds => Verdict::Pass,
        Ok(v) => {
            let (set, others) = v.counterexample.unwrap_or_default();
            Verdict::fail(Witness::Covered { set, others })
        }
        Err(_) => Verdict::Degenerate { entity: 0 },
    }
}

/// Domains `{0..F}` for every edge: any forest label is admissible.
fn full_edge_domains(g: &Graph, palette: u64) -> LabelDomain {
    LabelDomain::new(EntityKind::Edge, palette.max(1), palette.max(1), vec![(0..palette).collect(); g.m()])
        .expect("labels inside palette")
}

pub fn execute(algorithm: Algorithm, input: &LoadedGraph, params: &Params, seed: u64) -> ConfigResult<Execution> {
    let g = &input.graph;
    let n = g.n();
    let delta = g.max_degree();
    let kind = algorithm.round_kind();
    let out = match algorithm {
        Algorithm::Cv3Delta => {
            let orientation = Orientation::rooted_forest(g).map_err(|e| reject(algorithm, e.into()))?;
            let run = cole_vishkin_3coloring(g, &orientation, params.int("max_rounds")).map_err(|e| match e {
                Error::Incomplete { .. } => reject(algorithm, e),
                other => reject(algorithm, other),
            })?;
            let labels: Vec<Option<u64>> = run.colors.iter().map(|&c| Some(c as u64)).collect();
            let domains = expand_to_generic(&run.colors, delta).map_err(|e| reject(algorithm, e))?;
            Execution {
                rounds: RoundSummary::from_stats(run.stats, kind),
                verdicts: vec![
                    named("proper-3-coloring", check_proper_vertex(g, &labels)),
                    named("domains-disjoint", check_domains_disjoint(g, &domains)),
                ],
                declared_palette: Some(3 * delta.max(1) as u64),
                expected: Some(Expectation {
                    solution_domain_min: Some(delta.max(1) as u64),
                    contingency_factor: Some(Ratio::from_integer(3)),
                }),
                details: json!({ "delta": delta, "reduction_iterations": run.reduction_iterations }),
                domains: Some(domains),
            }
        }
        Algorithm::RandomColoring => {
            let c = params.float("c");
            let run = generic_random_coloring_unchecked(g, c, seed).map_err(|e| reject(algorithm, e))?;
            let half = run.k.div_ceil(2);
            let below = run.domains.sizes().iter().filter(|&&s| s < half).count();
            Execution {
                rounds: RoundSummary::from_stats(run.stats, kind),
                verdicts: vec![named("domains-disjoint", check_domains_disjoint(g, &run.domains))],
                declared_palette: Some(run.domains.palette()),
                expected: Some(Expectation { solution_domain_min: Some(half as u64), contingency_factor: None }),
                details: json!({
                    "k": run.k,
                    "value_range": 2 * run.delta.max(1),
                    "vertices_below_half_k": below,
                }),
                domains: Some(run.domains),
            }
        }
        Algorithm::Delta2Coloring => {
            let run = generic_delta2_coloring(g).map_err(|e| reject(algorithm, e))?;
            Execution {
                rounds: RoundSummary::from_stats(run.stats, kind),
                verdicts: vec![
                    named("domains-disjoint", check_domains_disjoint(g, &run.domains)),
                    named("final-family-cover-free", family_verdict(run.q_final, delta, 0, seed)),
                ],
                declared_palette: Some(run.q_final * run.q_final),
                expected: Some(Expectation { solution_domain_min: Some(delta as u64), contingency_factor: None }),
                details: json!({ "q_final": run.q_final, "schedule": run.schedule, "log_star_n": log_star(n) }),
                domains: Some(run.domains),
            }
        }
        Algorithm::DefectiveColoring => {
            let p = params.int("p");
            let run = generic_defective_coloring(g, p).map_err(|e| reject(algorithm, e))?;
            let defect = check_defective_domains(g, &run.domains, p);
            Execution {
                rounds: RoundSummary::from_stats(run.stats, kind),
                verdicts: vec![
                    named("defect-condition", defect.verdict.clone()),
                    named("final-family-cover-free", family_verdict(run.q_final, delta, p, seed)),
                ],
                declared_palette: Some(run.q_final * run.q_final),
                expected: None,
                details: json!({
                    "q_final": run.q_final,
                    "schedule": run.schedule,
                    "worst_case_defect": defect.max_defect,
                    "log_star_n": log_star(n),
                }),
                domains: Some(run.domains),
            }
        }
        Algorithm::ArboricityColoring => {
            let run = arboricity_generic_coloring_unchecked(g, params.int("a"), params.float("eps"), params.float("c"), seed)
                .map_err(|e| reject(algorithm, e))?;
            let half = run.k.div_ceil(2);
            let below = run.domains.sizes().iter().filter(|&&s| s < half).count();
            Execution {
                rounds: RoundSummary::from_stats(run.stats, kind),
                verdicts: vec![named("domains-disjoint", check_domains_disjoint(g, &run.domains))],
                declared_palette: Some(run.domains.palette()),
                expected: Some(Expectation { solution_domain_min: Some(half as u64), contingency_factor: None }),
                details: json!({
                    "k": run.k,
                    "out_degree_bound": run.out_degree_bound,
                    "layer_count": run.layer_count,
                    "vertices_below_half_k": below,
                }),
                domains: Some(run.domains),
            }
        }
        Algorithm::NetworkDecomposition => {
            let c = params.int("c");
            let radius_cap = params.int("B");
            let nd = match generic_network_decomposition(g, c, seed, Some(radius_cap)) {
                Ok(nd) => nd,
                Err(Error::Incomplete { rounds, .. }) => {
                    return Ok(incomplete(algorithm, rounds, json!({ "radius_cap": radius_cap })));
                }
                Err(e) => return Err(reject(algorithm, e)),
            };
            let check = check_network_decomposition(g, &nd.clusters, 2 * radius_cap, usize::MAX);
            let classes: BTreeSet<u64> = nd.classes.domains().iter().flatten().copied().collect();
            let budget = c * 4 * log2_ceil(n);
            let class_budget = if classes.len() <= budget {
                Verdict::Pass
            } else {
                Verdict::fail(Witness::TooManyLabels { count: classes.len(), budget })
            };
            Execution {
                rounds: RoundSummary::from_stats(nd.stats, kind),
                verdicts: vec![
                    named("weak-diameter", check.verdict),
                    named("cluster-coloring", check_cluster_coloring(g, &nd.clusters)),
                    named("class-budget", class_budget),
                ],
                declared_palette: Some(nd.classes.palette()),
                expected: Some(Expectation { solution_domain_min: Some(c as u64), contingency_factor: None }),
                details: json!({
                    "radius_cap": nd.radius_cap,
                    "phase_budget": nd.phase_budget,
                    "phases_used": nd.runs.iter().map(|r| r.phase_count).collect::<Vec<_>>(),
                    "max_weak_diameter": check.max_weak_diameter,
                    "distinct_clusters": check.distinct_labels,
                    "distinct_classes": classes.len(),
                }),
                domains: Some(nd.classes),
            }
        }
        Algorithm::ForestId | Algorithm::ForestHPartition => {
            let mode = match algorithm {
                Algorithm::ForestId => ForestMode::IdOrientation,
                _ => ForestMode::HPartition { a: params.int("a"), eps: params.float("eps") },
            };
            let fd = forest_decomposition(g, mode, seed).map_err(|e| reject(algorithm, e))?;
            let forests = fd.labeling.forest_count as u64;
            let domains = full_edge_domains(g, forests);
            let max_out = (0..n)
                .map(|v| g.incident_edges(v).iter().filter(|&&e| fd.labeling.sources[e] == v).count())
                .max()
                .unwrap_or(0);
            Execution {
                rounds: RoundSummary::from_stats(fd.stats, kind),
                verdicts: vec![named("forest-labeling", check_forest_labeling(g, &fd.labeling))],
                declared_palette: Some(forests.max(1)),
                expected: Some(Expectation {
                    solution_domain_min: Some(forests.max(1)),
                    contingency_factor: Some(Ratio::from_integer(1)),
                }),
                details: json!({
                    "forest_count": forests,
                    "classes_used": fd.labeling.edge_labels.iter().collect::<BTreeSet<_>>().len(),
                    "max_out_degree": max_out,
                    "layer_count": fd.layer_count,
                }),
                domains: Some(domains),
            }
        }
        Algorithm::EdgeRandom | Algorithm::EdgeDelta2 => {
            let variant = match algorithm {
                Algorithm::EdgeRandom => LineGraphVariant::Random { c: params.float("c") },
                _ => LineGraphVariant::Delta2,
            };
            let out = edge_coloring_via_line_graph(g, variant, seed).map_err(|e| reject(algorithm, e))?;
            let expected_min = match variant {
                LineGraphVariant::Random { c } => {
                    (privlabel_core::vertex::tuple_count(c, g.m()) as u64).div_ceil(2)
                }
                LineGraphVariant::Delta2 => (2 * delta).saturating_sub(1) as u64,
            };
            Execution {
                rounds: RoundSummary::from_stats(out.stats, kind),
                verdicts: vec![named("edge-domains-disjoint", check_edge_domains_disjoint(g, &out.domains))],
                declared_palette: Some(out.domains.palette()),
                expected: Some(Expectation { solution_domain_min: Some(expected_min), contingency_factor: None }),
                details: json!({
                    "line_graph_max_degree": out.line_graph_max_degree,
                    "q_final": out.q_final,
                    "g_rounds_upper_bound": 2 * out.stats.rounds,
                }),
                domains: Some(out.domains),
            }
        }
        Algorithm::KuhnDefectiveEdge => {
            let i = params.int("i");
            let out = kuhn_defective_edge_coloring(g, i, seed).map_err(|e| reject(algorithm, e))?;
            let defect = check_edge_defect(g, &out.colors, 4 * i - 2);
            Execution {
                rounds: RoundSummary::from_stats(out.stats, kind),
                verdicts: vec![named("edge-defect", defect.verdict)],
                declared_palette: Some(out.palette),
                expected: Some(Expectation {
                    solution_domain_min: Some(out.palette),
                    contingency_factor: Some(Ratio::from_integer(1)),
                }),
                details: json!({
                    "numbers": out.numbers,
                    "palette": out.palette,
                    "max_defect": defect.max_defect,
                    "defect_bound": 4 * i - 2,
                }),
                domains: Some(out.domains),
            }
        }
        Algorithm::DominatingEdgeColoring => {
            let c = params.int("c");
            let t = params.int("t");
            let out = match dominating_edge_coloring(g, c, t, seed) {
                Ok(out) => out,
                Err(Error::Incomplete { rounds, .. }) => return Ok(incomplete(algorithm, rounds, json!({}))),
                Err(e) => return Err(reject(algorithm, e)),
            };
            let mut per_class = Verdict::Pass;
            for class in 1..=out.classes {
                let members: Vec<usize> = out.dominating.iter().copied().filter(|&e| out.class_of[e] == class).collect();
                per_class = per_class.and(|| check_matching(g, &members));
            }
            // seeded joint selections from the domains
            let mut stream = privlabel_core::derive_stream(derive_seed(seed, 0x5e1ec7), 0);
            let mut selections = Verdict::Pass;
            for _ in 0..100 {
                let pick: Vec<(usize, u64)> = out
                    .dominating
                    .iter()
                    .enumerate()
                    .map(|(j, &e)| {
                        let d = out.domains.domain(j);
                        (e, d[stream.draw_uniform(d.len() as u64) as usize])
                    })
                    .collect();
                selections = selections.and(|| check_partial_edge_properness(g, &pick));
            }
            Execution {
                rounds: RoundSummary::from_stats(out.stats, kind),
                verdicts: vec![
                    named("edge-dominating", check_edge_dominating(g, &out.dominating)),
                    named("per-class-matching", per_class),
                    named("sampled-selections-proper", selections),
                ],
                declared_palette: Some(out.domains.palette()),
                expected: Some(Expectation {
                    solution_domain_min: Some(t as u64),
                    contingency_factor: Some(Ratio::from_integer(out.classes as u64)),
                }),
                details: json!({
                    "classes": out.classes,
                    "class_width": out.class_width,
                    "base_palette": out.base_palette,
                    "dominating_edges": out.dominating.len(),
                    "coloring_rounds": out.coloring_stats.rounds,
                    "matching_rounds": out.matching_stats.rounds,
                }),
                domains: Some(out.domains),
            }
        }
        Algorithm::LinialSaks => {
            let radius_cap = params.int("B");
            let run = linial_saks(g, seed, radius_cap, default_phase_budget(n)).map_err(|e| reject(algorithm, e))?;
            let unclustered = run.assignment.iter().filter(|a| a.is_none()).count();
            let stride = (default_phase_budget(n) * n.max(1)) as u64;
            let labels: Vec<Vec<u64>> = run
                .assignment
                .iter()
                .map(|a| match a {
                    Some((phase, center)) => vec![ClusterLabel { run: 0, phase: *phase, center: *center }.encode(n, stride)],
                    None => vec![],
                })
                .collect();
            let clusters = LabelDomain::new(EntityKind::Vertex, stride, stride, labels).expect("labels inside palette");
            let check = check_network_decomposition(g, &clusters, 2 * radius_cap, usize::MAX);
            Execution {
                rounds: RoundSummary::from_stats(run.stats, kind),
                verdicts: vec![
                    named("weak-diameter", check.verdict),
                    named("cluster-coloring", check_cluster_coloring(g, &clusters)),
                ],
                declared_palette: None,
                expected: None,
                details: json!({
                    "phase_count": run.phase_count,
                    "radius_cap": run.radius_cap,
                    "unclustered": unclustered,
                    "max_weak_diameter": check.max_weak_diameter,
                    "clusters": check.distinct_labels,
                }),
                domains: None,
            }
        }
        Algorithm::HPartition => {
            let hp = h_partition(g, params.int("a"), params.float("eps")).map_err(|e| reject(algorithm, e))?;
            let check = check_h_partition(g, &hp.layers, hp.threshold);
            Execution {
                rounds: RoundSummary::from_stats(hp.stats, kind),
                verdicts: vec![named("layer-degree", check.verdict)],
                declared_palette: None,
                expected: None,
                details: json!({
                    "layer_count": hp.layer_count,
                    "threshold": hp.threshold,
                    "max_out_degree": hp.orientation.max_out_degree(),
                    "acyclic": hp.orientation.is_acyclic(),
                }),
                domains: None,
            }
        }
        Algorithm::SimpleEdgeColoring => {
            let palette = (params.float("c") * delta.max(1) as f64).ceil() as usize;
            let out = simple_edge_coloring(g, palette, seed, params.int("max_rounds")).map_err(|e| reject(algorithm, e))?;
            let colors: Vec<Option<u64>> = out.colors.iter().map(|c| c.map(u64::from)).collect();
            let verdict = check_edge_properness(g, &colors);
            Execution {
                rounds: RoundSummary::from_stats(out.stats, kind),
                verdicts: vec![named("edge-properness", verdict)],
                declared_palette: None,
                expected: None,
                details: json!({
                    "palette": palette,
                    "uncolored": colors.iter().filter(|c| c.is_none()).count(),
                }),
                domains: None,
            }
        }
        Algorithm::MaximalMatching => {
            let out = maximal_matching(g, seed, params.int("max_rounds")).map_err(|e| reject(algorithm, e))?;
            Execution {
                rounds: RoundSummary::from_stats(out.stats, kind),
                verdicts: vec![named("maximal-matching", check_maximal_matching(g, &out.edges))],
                declared_palette: None,
                expected: None,
                details: json!({ "matching_size": out.edges.len() }),
                domains: None,
            }
        }
    };
    Ok(out)
}
