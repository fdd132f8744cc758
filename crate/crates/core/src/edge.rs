//! Edge labelings: vertex algorithms run on the line graph, a one-round
//! defective edge coloring, and a generically colored edge dominating set.
//!
//! Runs on L(G) report rounds of L(G). Each L(G) round is simulated by at most
//! two rounds of G, with an edge played by its higher-ID endpoint.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use privlabel_graph::{line_graph, EdgeId, EntityKind, Graph, Label, LabelDomain, VertexId};

use crate::error::{Error, Result};
use crate::sim::{derive_seed, run_sync, NodeContext, NodeProgram, Outbox, RandomnessStream, RunStats, Status};
use crate::vertex::{generic_delta2_coloring_with_degree_bound, generic_random_coloring};

fn relabel(domains: LabelDomain, mapping: &[VertexId]) -> Result<LabelDomain> {
    let per_edge = mapping.iter().map(|&lv| domains.domain(lv).to_vec()).collect();
    Ok(LabelDomain::new(EntityKind::Edge, domains.palette(), domains.stride(), per_edge)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum LineGraphVariant {
    /// One-round random tuples with `k = ⌈c·log₂ m⌉`.
    Random { c: f64 },
    /// Linial reductions with the degree bound `2Δ - 1`.
    Delta2,
}

#[derive(Clone, Debug, Serialize)]
pub struct LineGraphColoring {
    pub domains: LabelDomain,
    pub line_graph_max_degree: usize,
    /// Prime of the final family (delta2 variant only).
    pub q_final: Option<u64>,
    /// Rounds counted on L(G).
    pub stats: RunStats,
}

/// Runs a generic vertex coloring on L(G); adjacent edges get disjoint
/// domains.
pub fn edge_coloring_via_line_graph(g: &Graph, variant: LineGraphVariant, seed: u64) -> Result<LineGraphColoring> {
    let (lg, mapping) = line_graph(g);
    let (domains, q_final, stats) = match variant {
        LineGraphVariant::Random { c } => {
            let run = generic_random_coloring(&lg, c, seed)?;
            (run.domains, None, run.stats)
        }
        LineGraphVariant::Delta2 => {
            let bound = (2 * g.max_degree()).saturating_sub(1).max(lg.max_degree());
            let run = generic_delta2_coloring_with_degree_bound(&lg, bound)?;
            (run.domains, Some(run.q_final), run.stats)
        }
    };
    Ok(LineGraphColoring {
        domains: relabel(domains, &mapping)?,
        line_graph_max_degree: lg.max_degree(),
        q_final,
        stats,
    })
}

// ---------------------------------------------------------------------------
// Defective edge coloring from endpoint numberings

/// Color index of the unordered pair `{a, b}`, `1 ≤ a ≤ b ≤ numbers`, in
/// `0..C(numbers + 1, 2)`.
pub fn pair_index(a: u32, b: u32, numbers: u32) -> u64 {
    let (a, b) = (a.min(b) as u64, a.max(b) as u64);
    let l = numbers as u64;
    (a - 1) * l - (a - 1) * (a.saturating_sub(2)) / 2 + (b - a)
}

/// `C(numbers + 1, 2)`.
pub fn pair_palette(numbers: u32) -> u64 {
    let l = numbers as u64;
    l * (l + 1) / 2
}

/// Ways to number `degree` edges with values in `1..=numbers`, each value
/// used at most `cap` times. `table[x][s]` counts numberings of `s` edges
/// with the values `x+1..=numbers`.
fn numbering_table(degree: usize, numbers: usize, cap: usize) -> Vec<Vec<f64>> {
    let binom = |n: usize, k: usize| -> f64 { (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64) };
    let mut table = vec![vec![0.0; degree + 1]; numbers + 1];
    table[numbers][0] = 1.0;
    for x in (0..numbers).rev() {
        for s in 0..=degree {
            table[x][s] = (0..=cap.min(s)).map(|j| binom(s, j) * table[x + 1][s - j]).sum();
        }
    }
    table
}

/// Number of valid numberings; exact while it stays below 2^53.
pub fn count_numberings(degree: usize, numbers: usize, cap: usize) -> f64 {
    numbering_table(degree, numbers, cap)[0][degree]
}

/// A uniformly random map from `degree` incident edges to `1..=numbers` using
/// every value at most `cap` times.
pub fn sample_numbering<R: Rng + ?Sized>(degree: usize, numbers: usize, cap: usize, rng: &mut R) -> Vec<u32> {
    assert!(numbers * cap >= degree, "no valid numbering");
    let table = numbering_table(degree, numbers, cap);
    let binom = |n: usize, k: usize| -> f64 { (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64) };
    // fiber sizes first, then a uniform arrangement of the edges
    let mut values = Vec::with_capacity(degree);
    let mut left = degree;
    for x in 0..numbers {
        let total = table[x][left];
        let mut u = rng.gen::<f64>() * total;
        let mut take = cap.min(left);
        for j in 0..=cap.min(left) {
            let w = binom(left, j) * table[x + 1][left - j];
            if u < w {
                take = j;
                break;
            }
            u -= w;
        }
        // guard against rounding pushing us onto an impossible tail
        while table[x + 1][left - take] == 0.0 {
            take -= 1;
        }
        values.extend(std::iter::repeat(x as u32 + 1).take(take));
        left -= take;
    }
    for i in (1..values.len()).rev() {
        let j = rng.gen_range(0..=i);
        values.swap(i, j);
    }
    values
}

#[derive(Clone, Debug, Serialize)]
pub struct DefectiveEdgeColoring {
    /// Endpoint numbers `{a ≤ b}` per edge.
    pub pairs: Vec<(u32, u32)>,
    /// Scalar colors in `0..palette`.
    pub colors: Vec<u64>,
    /// Numbers available to each vertex, `⌈Δ/i⌉`.
    pub numbers: u32,
    pub palette: u64,
    /// Every color is reachable for every edge.
    pub domains: LabelDomain,
    pub stats: RunStats,
}

struct EndpointNumbering {
    numbers: usize,
    cap: usize,
}

impl NodeProgram for EndpointNumbering {
    type State = Vec<(EdgeId, u32, u32)>;
    type Message = (EdgeId, u32);
    type Output = Vec<(EdgeId, u32, u32)>;

    fn init(&self, ctx: &NodeContext<'_>, rng: &mut RandomnessStream, out: &mut Outbox<(EdgeId, u32)>) -> Self::State {
        let edges = ctx.graph.incident_edges(ctx.id);
        let numbering = sample_numbering(edges.len(), self.numbers, self.cap, rng);
        edges
            .iter()
            .zip(numbering)
            .map(|(&e, x)| {
                out.send(ctx.graph.other_endpoint(e, ctx.id), (e, x));
                (e, x, 0)
            })
            .collect()
    }

    fn step(
        &self,
        _: &NodeContext<'_>,
        state: &mut Self::State,
        inbox: &[(VertexId, (EdgeId, u32))],
        _: &mut RandomnessStream,
        _: &mut Outbox<(EdgeId, u32)>,
    ) -> Status {
        for &(_, (e, theirs)) in inbox {
            if let Some(entry) = state.iter_mut().find(|entry| entry.0 == e) {
                entry.2 = theirs;
            }
        }
        Status::Halted
    }

    fn output(&self, _: &NodeContext<'_>, state: Self::State) -> Self::Output {
        state
    }
}

/// Every vertex numbers its incident edges with values in `1..=⌈Δ/i⌉`, each
/// value at most `i` times, uniformly among such numberings; edge `{u, v}` is
/// colored with the pair of its two numbers. One round; every color class has
/// defect at most `4i - 2`.
pub fn kuhn_defective_edge_coloring(g: &Graph, i: usize, seed: u64) -> Result<DefectiveEdgeColoring> {
    let delta = g.max_degree();
    if i < 1 || i > delta {
        return Err(Error::InvalidParameter(format!("i must be in [1, {delta}], got {i}")));
    }
    let numbers = delta.div_ceil(i);
    let report = run_sync(&EndpointNumbering { numbers, cap: i }, g, seed, 1)?;
    let mut pairs = vec![(0u32, 0u32); g.m()];
    for (v, entries) in report.outputs.iter().enumerate() {
        for &(e, mine, theirs) in entries {
            // the lower endpoint records the pair
            if g.edge(e).0 == v {
                pairs[e] = (mine.min(theirs), mine.max(theirs));
            }
        }
    }
    let numbers = numbers as u32;
    let colors: Vec<u64> = pairs.iter().map(|&(a, b)| pair_index(a, b, numbers)).collect();
    let palette = pair_palette(numbers);
    let domains = LabelDomain::new(EntityKind::Edge, palette, palette, vec![(0..palette).collect(); g.m()])?;
    Ok(DefectiveEdgeColoring { pairs, colors, numbers, palette, domains, stats: RunStats::from_report(&report) })
}

// ---------------------------------------------------------------------------
// Proper edge coloring and maximal matching on L(G)

#[derive(Clone, Debug, Serialize)]
pub struct EdgeColoring {
    /// `None` for edges left uncolored when the round budget ran out.
    pub colors: Vec<Option<u32>>,
    pub palette: u32,
    /// Rounds counted on L(G).
    pub stats: RunStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Claim {
    Proposal(u32),
    Final(u32),
}

struct ProposalColoring {
    palette: u32,
}

struct ProposalState {
    proposal: u32,
    taken: Vec<bool>,
    color: Option<u32>,
}

impl ProposalColoring {
    fn propose(&self, state: &mut ProposalState, rng: &mut RandomnessStream) {
        let free: Vec<u32> = (0..self.palette).filter(|&x| !state.taken[x as usize]).collect();
        state.proposal = free[rng.draw_uniform(free.len() as u64) as usize];
    }
}

impl NodeProgram for ProposalColoring {
    type State = ProposalState;
    type Message = Claim;
    type Output = Option<u32>;

    fn init(&self, ctx: &NodeContext<'_>, rng: &mut RandomnessStream, out: &mut Outbox<Claim>) -> ProposalState {
        let mut state = ProposalState { proposal: 0, taken: vec![false; self.palette as usize], color: None };
        self.propose(&mut state, rng);
        out.broadcast(ctx, Claim::Proposal(state.proposal));
        state
    }

    fn step(
        &self,
        ctx: &NodeContext<'_>,
        state: &mut ProposalState,
        inbox: &[(VertexId, Claim)],
        rng: &mut RandomnessStream,
        out: &mut Outbox<Claim>,
    ) -> Status {
        let mut clash = false;
        for &(_, claim) in inbox {
            match claim {
                Claim::Proposal(x) => clash |= x == state.proposal,
                Claim::Final(x) => {
                    clash |= x == state.proposal;
                    state.taken[x as usize] = true;
                }
            }
        }
        if !clash {
            state.color = Some(state.proposal);
            out.broadcast(ctx, Claim::Final(state.proposal));
            return Status::Halted;
        }
        self.propose(state, rng);
        out.broadcast(ctx, Claim::Proposal(state.proposal));
        Status::Running
    }

    fn output(&self, _: &NodeContext<'_>, state: ProposalState) -> Option<u32> {
        state.color
    }
}

/// Proper edge coloring with `palette ≥ 2Δ - 1` colors: every uncolored edge
/// proposes a color not yet fixed around it and keeps it unless an adjacent
/// edge proposed or fixed the same color.
pub fn simple_edge_coloring(g: &Graph, palette: usize, seed: u64, max_rounds: usize) -> Result<EdgeColoring> {
    let need = (2 * g.max_degree()).saturating_sub(1).max(1);
    if palette < need {
        return Err(Error::InvalidParameter(format!("palette {palette} is below 2Δ-1 = {need}")));
    }
    let (lg, mapping) = line_graph(g);
    let report = run_sync(&ProposalColoring { palette: palette as u32 }, &lg, seed, max_rounds)?;
    Ok(EdgeColoring {
        colors: mapping.iter().map(|&lv| report.outputs[lv]).collect(),
        palette: palette as u32,
        stats: RunStats::from_report(&report),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Matching {
    /// Edges of the matching in increasing order.
    pub edges: Vec<EdgeId>,
    /// Rounds counted on L(G).
    pub stats: RunStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MisMsg {
    Priority(u64),
    Joined,
}

struct LubyMis;

#[derive(Clone, Copy)]
struct MisState {
    priority: u64,
    member: Option<bool>,
}

impl NodeProgram for LubyMis {
    type State = MisState;
    type Message = MisMsg;
    type Output = Option<bool>;

    fn init(&self, ctx: &NodeContext<'_>, rng: &mut RandomnessStream, out: &mut Outbox<MisMsg>) -> MisState {
        let priority = rng.next_u64_for_priority();
        out.broadcast(ctx, MisMsg::Priority(priority));
        MisState { priority, member: None }
    }

    fn step(
        &self,
        ctx: &NodeContext<'_>,
        state: &mut MisState,
        inbox: &[(VertexId, MisMsg)],
        rng: &mut RandomnessStream,
        out: &mut Outbox<MisMsg>,
    ) -> Status {
        if ctx.round % 2 == 1 {
            let mine = (state.priority, ctx.id);
            let beaten = inbox.iter().any(|&(u, m)| matches!(m, MisMsg::Priority(p) if (p, u) > mine));
            if !beaten {
                state.member = Some(true);
                out.broadcast(ctx, MisMsg::Joined);
                return Status::Halted;
            }
            return Status::Running;
        }
        if inbox.iter().any(|m| m.1 == MisMsg::Joined) {
            state.member = Some(false);
            return Status::Halted;
        }
        state.priority = rng.next_u64_for_priority();
        out.broadcast(ctx, MisMsg::Priority(state.priority));
        Status::Running
    }

    fn output(&self, _: &NodeContext<'_>, state: MisState) -> Option<bool> {
        state.member
    }
}

trait PriorityDraw {
    fn next_u64_for_priority(&mut self) -> u64;
}

impl PriorityDraw for RandomnessStream {
    fn next_u64_for_priority(&mut self) -> u64 {
        self.gen()
    }
}

/// Default round budget for the randomized subroutines on `m` edges.
pub fn default_subroutine_rounds(m: usize) -> usize {
    20 * ((m.max(2) as f64).log2().ceil() as usize + 1)
}

/// Maximal matching as a maximal independent set of L(G) (Luby's random
/// priorities, two rounds per iteration).
pub fn maximal_matching(g: &Graph, seed: u64, max_rounds: usize) -> Result<Matching> {
    let (lg, mapping) = line_graph(g);
    let report = run_sync(&LubyMis, &lg, seed, max_rounds)?;
    let edges = (0..g.m()).filter(|&e| report.outputs[mapping[e]] == Some(true)).collect();
    Ok(Matching { edges, stats: RunStats::from_report(&report) })
}

// ---------------------------------------------------------------------------
// Edge dominating set with a generic coloring

/// Number of classes `s = ⌈√Δ⌉` and class width `⌈cΔ/s⌉` of base colors.
pub fn class_partition(delta: usize, c: usize) -> (usize, usize) {
    let delta = delta.max(1);
    let mut s = (delta as f64).sqrt().ceil() as usize;
    while s * s < delta {
        s += 1;
    }
    while s > 1 && (s - 1) * (s - 1) >= delta {
        s -= 1;
    }
    (s, (c * delta).div_ceil(s))
}

#[derive(Clone, Debug, Serialize)]
pub struct DominatingColoredSet {
    /// Edges of the dominating set `D`, increasing.
    pub dominating: Vec<EdgeId>,
    /// Class of every edge, from 1.
    pub class_of: Vec<usize>,
    /// Domains of the edges of `D`, in the order of `dominating`: class `i`
    /// owns the labels `(i-1)·t .. i·t - 1`.
    pub domains: LabelDomain,
    pub classes: usize,
    pub class_width: usize,
    pub t: usize,
    pub base_palette: usize,
    pub coloring_stats: RunStats,
    pub matching_stats: RunStats,
    pub stats: RunStats,
}

/// Colors the edges with `cΔ` colors, splits the colors into `⌈√Δ⌉` ranges,
/// and takes a maximal matching inside each range. The union `D` of the
/// matchings dominates every edge; an edge of class `i` may take any label in
/// the class's private range of `t` labels.
pub fn dominating_edge_coloring(g: &Graph, c: usize, t: usize, seed: u64) -> Result<DominatingColoredSet> {
    let delta = g.max_degree();
    if delta < 1 {
        return Err(Error::InvalidParameter("graph has no edges".into()));
    }
    if c < 3 {
        return Err(Error::InvalidParameter(format!("c must be at least 3, got {c}")));
    }
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t must be at least 2, got {t}")));
    }
    let base_palette = c * delta;
    let budget = default_subroutine_rounds(g.m());
    let base = simple_edge_coloring(g, base_palette, derive_seed(seed, 0), budget)?;
    if !base.stats.complete {
        return Err(Error::Incomplete { rounds: base.stats.rounds, seed });
    }
    let (classes, width) = class_partition(delta, c);
    let class_of: Vec<usize> = base.colors.iter().map(|x| x.expect("complete") as usize / width + 1).collect();

    let per_class: Vec<(Vec<EdgeId>, RunStats)> = (1..=classes)
        .into_par_iter()
        .map(|i| {
            let keep: Vec<EdgeId> = (0..g.m()).filter(|&e| class_of[e] == i).collect();
            let (sub, back) = g.edge_subgraph(&keep);
            let m = maximal_matching(&sub, derive_seed(seed, i as u64), default_subroutine_rounds(sub.m()))?;
            Ok((m.edges.iter().map(|&e| back[e]).collect(), m.stats))
        })
        .collect::<Result<_>>()?;
    let matching_stats = per_class.iter().fold(RunStats::empty(), |acc, (_, s)| acc.alongside(*s));
    if !matching_stats.complete {
        return Err(Error::Incomplete { rounds: matching_stats.rounds, seed });
    }
    let mut dominating: Vec<EdgeId> = per_class.into_iter().flat_map(|(edges, _)| edges).collect();
    dominating.sort_unstable();
    let labels = dominating
        .iter()
        .map(|&e| (0..t as u64).map(|x| Label::new(class_of[e] as u64 - 1, x)).collect())
        .collect();
    let domains = LabelDomain::from_labels(EntityKind::Edge, classes as u64, t as u64, labels)?;
    Ok(DominatingColoredSet {
        dominating,
        class_of,
        domains,
        classes,
        class_width: width,
        t,
        base_palette,
        coloring_stats: base.stats,
        matching_stats,
        stats: base.stats.then(matching_stats),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use privlabel_graph::{generate, GeneratorKind, GeneratorSpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn gen(kind: GeneratorKind, seed: u64) -> Graph {
        generate(&GeneratorSpec::new(kind, seed)).unwrap().graph
    }

    fn share_endpoint(g: &Graph, a: EdgeId, b: EdgeId) -> bool {
        let ((u, v), (x, y)) = (g.edge(a), g.edge(b));
        a != b && (u == x || u == y || v == x || v == y)
    }

    #[test]
    fn single_edge_line_graph_keeps_everything() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let out = edge_coloring_via_line_graph(&g, LineGraphVariant::Random { c: 4.0 }, 1).unwrap();
        assert_eq!(out.domains.sizes(), vec![1]);
        let out = edge_coloring_via_line_graph(&g, LineGraphVariant::Delta2, 1).unwrap();
        assert!(out.domains.min_size().unwrap() >= 1);
    }

    #[test]
    fn triangle_delta2_disjoint() {
        let g = gen(GeneratorKind::Clique { n: 3 }, 0);
        let out = edge_coloring_via_line_graph(&g, LineGraphVariant::Delta2, 0).unwrap();
        for a in 0..3 {
            for b in a + 1..3 {
                assert!(out.domains.domain(a).iter().all(|x| !out.domains.contains(b, *x)));
            }
        }
        assert!(out.domains.min_size().unwrap() >= 3);
    }

    #[test]
    fn star_random_disjoint() {
        let g = Graph::from_edges(9, (1..9).map(|v| (0, v))).unwrap();
        let out = edge_coloring_via_line_graph(&g, LineGraphVariant::Random { c: 4.0 }, 3).unwrap();
        for a in 0..8 {
            for b in a + 1..8 {
                assert!(out.domains.domain(a).iter().all(|x| !out.domains.contains(b, *x)));
            }
        }
    }

    #[test]
    fn pair_indices_are_a_bijection() {
        for l in 1..12u32 {
            let mut seen = HashSet::new();
            for a in 1..=l {
                for b in a..=l {
                    let x = pair_index(a, b, l);
                    assert!(x < pair_palette(l));
                    assert!(seen.insert(x));
                    assert_eq!(x, pair_index(b, a, l));
                }
            }
            assert_eq!(seen.len() as u64, pair_palette(l));
        }
    }

    #[test]
    fn numbering_counts_match_enumeration() {
        for (deg, l, cap) in [(4, 2, 2), (3, 3, 1), (5, 3, 2), (2, 1, 2), (0, 3, 1)] {
            let mut count = 0;
            let total = (l as u64).pow(deg as u32);
            for code in 0..total {
                let mut fiber = vec![0; l];
                let mut rest = code;
                for _ in 0..deg {
                    fiber[(rest % l as u64) as usize] += 1;
                    rest /= l as u64;
                }
                count += fiber.iter().all(|&f| f <= cap) as u64;
            }
            assert_eq!(count_numberings(deg, l, cap), count as f64);
        }
    }

    #[test]
    fn numbering_sampler_is_uniform_on_small_case() {
        // degree 4, numbers {1,2}, cap 2: the 6 arrangements of 1,1,2,2
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut counts = std::collections::HashMap::new();
        for _ in 0..60_000 {
            *counts.entry(sample_numbering(4, 2, 2, &mut rng)).or_insert(0u32) += 1;
        }
        assert_eq!(counts.len(), 6);
        assert!(counts.values().all(|&c| (9_000..11_000).contains(&c)), "{counts:?}");
    }

    #[test]
    fn kuhn_i_equals_delta_is_monochromatic() {
        let g = gen(GeneratorKind::Gnp { n: 40, p: 0.2, max_degree: None }, 1);
        let out = kuhn_defective_edge_coloring(&g, g.max_degree(), 0).unwrap();
        assert_eq!(out.palette, 1);
        assert!(out.pairs.iter().all(|&p| p == (1, 1)));
    }

    #[test]
    fn kuhn_defect_bound() {
        let g = gen(GeneratorKind::Gnp { n: 256, p: 0.03, max_degree: Some(12) }, 2);
        for seed in 0..20 {
            let out = kuhn_defective_edge_coloring(&g, 3, seed).unwrap();
            assert_eq!(out.stats.rounds, 1);
            assert!(out.colors.iter().all(|&x| x < out.palette));
            for e in 0..g.m() {
                let defect = (0..g.m()).filter(|&f| share_endpoint(&g, e, f) && out.colors[f] == out.colors[e]).count();
                assert!(defect <= 10);
            }
        }
    }

    #[test]
    fn matching_of_disjoint_edges_colors_in_one_round() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let out = simple_edge_coloring(&g, 1, 0, 10).unwrap();
        assert_eq!(out.stats.rounds, 1);
        assert!(out.colors.iter().all(Option::is_some));
    }

    #[test]
    fn clique_edge_coloring_completes() {
        let g = gen(GeneratorKind::Clique { n: 8 }, 0);
        for seed in 0..20 {
            let out = simple_edge_coloring(&g, 21, seed, 50).unwrap();
            assert!(out.stats.complete);
            for a in 0..g.m() {
                for b in 0..g.m() {
                    if share_endpoint(&g, a, b) {
                        assert_ne!(out.colors[a], out.colors[b]);
                    }
                }
            }
        }
        assert!(simple_edge_coloring(&g, 12, 0, 50).is_err());
    }

    #[test]
    fn matching_is_maximal() {
        let g = gen(GeneratorKind::Gnp { n: 200, p: 0.04, max_degree: None }, 3);
        for seed in 0..10 {
            let m = maximal_matching(&g, seed, default_subroutine_rounds(g.m())).unwrap();
            assert!(m.stats.complete);
            let mut used = vec![false; g.n()];
            for &e in &m.edges {
                let (u, v) = g.edge(e);
                assert!(!used[u] && !used[v]);
                used[u] = true;
                used[v] = true;
            }
            assert!(g.edges().iter().all(|&(u, v)| used[u] || used[v]));
        }
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(maximal_matching(&p3, 0, 10).unwrap().edges.len(), 1);
    }

    #[test]
    fn class_formula() {
        assert_eq!(class_partition(4, 2), (2, 4));
        assert_eq!(class_partition(16, 3), (4, 12));
        assert_eq!(class_partition(5, 3), (3, 5));
        assert_eq!(class_partition(1, 3), (1, 3));
    }

    #[test]
    fn dominating_single_edge() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let out = dominating_edge_coloring(&g, 3, 3, 0).unwrap();
        assert_eq!(out.dominating, vec![0]);
        assert_eq!(out.class_of, vec![1]);
        assert_eq!(out.domains.domain(0), &[0, 1, 2]);
        assert!(dominating_edge_coloring(&g, 2, 3, 0).is_err());
    }

    #[test]
    fn dominating_on_gnp() {
        let g = gen(GeneratorKind::Gnp { n: 300, p: 0.03, max_degree: Some(16) }, 4);
        let out = dominating_edge_coloring(&g, 3, 3, 1).unwrap();
        let in_d: HashSet<EdgeId> = out.dominating.iter().copied().collect();
        for e in 0..g.m() {
            assert!(in_d.contains(&e) || out.dominating.iter().any(|&f| share_endpoint(&g, e, f)));
        }
        for &a in &out.dominating {
            for &b in &out.dominating {
                if share_endpoint(&g, a, b) {
                    assert_ne!(out.class_of[a], out.class_of[b]);
                }
            }
        }
    }
}
