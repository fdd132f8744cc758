//! Clusterings, low out-degree orientations and forest decompositions.

use serde::Serialize;

use privlabel_graph::{
    ClusterLabel, EdgeId, EntityKind, ForestLabeling, Graph, Label, LabelDomain, Orientation, VertexId,
};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sim::{derive_seed, run_sync, NodeContext, NodeProgram, Outbox, RandomnessStream, RunStats, Status};
use crate::vertex::tuple_count;

fn log2_ceil_f(n: usize) -> f64 {
    (n.max(2) as f64).log2()
}

/// Default radius cap `⌈2·log₂ n⌉`, at least 1.
pub fn default_radius_cap(n: usize) -> usize {
    ((2.0 * log2_ceil_f(n)).ceil() as usize).max(1)
}

/// Phase budget `⌈8·log₂ n⌉` of one clustering run, at least 1.
pub fn default_phase_budget(n: usize) -> usize {
    ((8.0 * log2_ceil_f(n)).ceil() as usize).max(1)
}

// ---------------------------------------------------------------------------
// Linial–Saks clustering

#[derive(Clone, Debug, Serialize)]
pub struct Clustering {
    /// `(phase, center)` per vertex; `None` if the phase budget ran out first.
    pub assignment: Vec<Option<(u32, u32)>>,
    pub phase_count: usize,
    pub radius_cap: usize,
    pub stats: RunStats,
}

impl Clustering {
    pub fn is_complete(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }
}

/// A ball announcement `(radius, center, distance from center)`.
type Record = (u32, u32, u32);

struct LinialSaks {
    radius_cap: u32,
    phase_budget: usize,
}

struct LsState {
    /// Records not dominated by a record with a larger `(radius, center)` and
    /// at least as much remaining reach `radius - distance`.
    front: Vec<Record>,
    joined: Option<(u32, u32)>,
}

impl LinialSaks {
    fn draw_radius(&self, rng: &mut RandomnessStream) -> u32 {
        let mut r = 1;
        while r < self.radius_cap && !rng.draw_bit() {
            r += 1;
        }
        r
    }

    fn fresh_phase(&self, ctx: &NodeContext<'_>, state: &mut LsState, rng: &mut RandomnessStream, out: &mut Outbox<Vec<Record>>) {
        let own = (self.draw_radius(rng), ctx.id as u32, 0);
        state.front = vec![own];
        out.broadcast(ctx, state.front.clone());
    }
}

fn merge(front: &mut Vec<Record>, incoming: impl IntoIterator<Item = Record>) {
    front.extend(incoming);
    // Larger key first, then shorter distance.
    front.sort_unstable_by(|a, b| (b.0, b.1).cmp(&(a.0, a.1)).then(a.2.cmp(&b.2)));
    let mut kept: Vec<Record> = Vec::with_capacity(front.len());
    let mut best_reach = i64::MIN;
    for &rec in front.iter() {
        let reach = rec.0 as i64 - rec.2 as i64;
        if reach > best_reach {
            kept.push(rec);
            best_reach = reach;
        }
    }
    *front = kept;
}

impl NodeProgram for LinialSaks {
    type State = LsState;
    type Message = Vec<Record>;
    type Output = Option<(u32, u32)>;

    fn init(&self, ctx: &NodeContext<'_>, rng: &mut RandomnessStream, out: &mut Outbox<Vec<Record>>) -> LsState {
        let mut state = LsState { front: Vec::new(), joined: None };
        self.fresh_phase(ctx, &mut state, rng, out);
        state
    }

    fn step(
        &self,
        ctx: &NodeContext<'_>,
        state: &mut LsState,
        inbox: &[(VertexId, Vec<Record>)],
        rng: &mut RandomnessStream,
        out: &mut Outbox<Vec<Record>>,
    ) -> Status {
        let b = self.radius_cap as usize;
        let phase = (ctx.round - 1) / b;
        let sub = (ctx.round - 1) % b;
        let before = state.front.clone();
        merge(&mut state.front, inbox.iter().flat_map(|(_, recs)| recs.iter().map(|&(r, c, d)| (r, c, d + 1))));
        if sub + 1 < b {
            // neighbors already hold everything sent in earlier rounds
            let extendable: Vec<Record> = state
                .front
                .iter()
                .copied()
                .filter(|rec| rec.2 < rec.0 && !before.contains(rec))
                .collect();
            if !extendable.is_empty() {
                out.broadcast(ctx, extendable);
            }
            return Status::Running;
        }
        // End of phase: the front's first record is the largest ball covering us.
        let (radius, center, dist) = state.front[0];
        if dist < radius {
            state.joined = Some((phase as u32, center));
            return Status::Halted;
        }
        if phase + 1 >= self.phase_budget {
            return Status::Halted;
        }
        self.fresh_phase(ctx, state, rng, out);
        Status::Running
    }

    fn output(&self, _: &NodeContext<'_>, state: LsState) -> Option<(u32, u32)> {
        state.joined
    }
}

/// One Linial–Saks execution on `g`.
///
/// Each phase every unclustered vertex draws a radius `r ∈ {1..B}` with
/// `P(r = i) = 2^-i` (the rest of the mass on `B`) and floods its ball for
/// `B` rounds through unclustered vertices. A vertex adopts the largest
/// `(radius, ID)` among balls that reach it and joins that cluster if it lies
/// strictly inside; clustered vertices drop out. Clusters of one phase are
/// pairwise non-adjacent and have weak diameter below `2B`.
pub fn linial_saks(g: &Graph, seed: u64, radius_cap: usize, phase_budget: usize) -> Result<Clustering> {
    if radius_cap == 0 || phase_budget == 0 {
        return Err(Error::InvalidParameter("radius cap and phase budget must be positive".into()));
    }
    let program = LinialSaks { radius_cap: radius_cap as u32, phase_budget };
    let report = run_sync(&program, g, seed, radius_cap * phase_budget)?;
    let phase_count = report.outputs.iter().flatten().map(|&(p, _)| p as usize + 1).max().unwrap_or(0);
    Ok(Clustering {
        stats: RunStats::from_report(&report),
        assignment: report.outputs,
        phase_count,
        radius_cap,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NetworkDecomposition {
    /// Per vertex the labels `(run, phase, center)` of its `c` clusters.
    pub clusters: LabelDomain,
    /// The same domains coarsened to `(run, phase)`: a proper coloring of each
    /// run's cluster graph. Its palette is `c · phase_budget`.
    pub classes: LabelDomain,
    pub runs: Vec<Clustering>,
    pub radius_cap: usize,
    pub phase_budget: usize,
    pub stats: RunStats,
}

/// `c` independent Linial–Saks executions side by side; vertex `v` gets the
/// labels `{<i, C_i(v)>}`.
pub fn generic_network_decomposition(
    g: &Graph,
    c: usize,
    seed: u64,
    radius_cap: Option<usize>,
) -> Result<NetworkDecomposition> {
    if c < 2 {
        return Err(Error::InvalidParameter(format!("c must be at least 2, got {c}")));
    }
    let n = g.n();
    let radius_cap = radius_cap.unwrap_or_else(|| default_radius_cap(n));
    let phase_budget = default_phase_budget(n);
    let runs: Vec<Clustering> = (0..c)
        .into_par_iter()
        .map(|i| linial_saks(g, derive_seed(seed, i as u64), radius_cap, phase_budget))
        .collect::<Result<_>>()?;
    if runs.iter().any(|r| !r.is_complete()) {
        return Err(Error::Incomplete { rounds: radius_cap * phase_budget, seed });
    }
    let stride = (phase_budget * n.max(1)) as u64;
    let mut cluster_domains = vec![Vec::with_capacity(c); n];
    let mut class_domains = vec![Vec::with_capacity(c); n];
    for (i, run) in runs.iter().enumerate() {
        for v in 0..n {
            let (phase, center) = run.assignment[v].expect("checked complete");
            let label = ClusterLabel { run: i as u32, phase, center };
            cluster_domains[v].push(label.encode(n, stride));
            class_domains[v].push(Label::new(i as u64, phase as u64));
        }
    }
    let stats = runs.iter().fold(RunStats::empty(), |acc, r| acc.alongside(r.stats));
    Ok(NetworkDecomposition {
        clusters: LabelDomain::new(EntityKind::Vertex, c as u64 * stride, stride, cluster_domains)?,
        classes: LabelDomain::from_labels(EntityKind::Vertex, c as u64, phase_budget as u64, class_domains)?,
        runs,
        radius_cap,
        phase_budget,
        stats,
    })
}

// ---------------------------------------------------------------------------
// H-partition

#[derive(Clone, Debug, Serialize)]
pub struct HPartition {
    /// Layer of each vertex, from 1.
    pub layers: Vec<usize>,
    pub layer_count: usize,
    /// `⌊(2+ε)·a⌋`: the peeling degree threshold and out-degree bound.
    pub threshold: usize,
    #[serde(skip)]
    pub orientation: Orientation,
    pub stats: RunStats,
}

struct Peeling {
    threshold: usize,
}

#[derive(Default)]
struct PeelState {
    layer: Option<usize>,
    departed: usize,
}

impl NodeProgram for Peeling {
    type State = PeelState;
    type Message = usize;
    type Output = Option<usize>;

    fn init(&self, _: &NodeContext<'_>, _: &mut RandomnessStream, _: &mut Outbox<usize>) -> PeelState {
        PeelState::default()
    }

    fn step(
        &self,
        ctx: &NodeContext<'_>,
        state: &mut PeelState,
        inbox: &[(VertexId, usize)],
        _: &mut RandomnessStream,
        out: &mut Outbox<usize>,
    ) -> Status {
        if state.layer.is_some() {
            // same-layer announcements have arrived; the orientation is local now
            return Status::Halted;
        }
        state.departed += inbox.len();
        if ctx.degree() - state.departed <= self.threshold {
            state.layer = Some(ctx.round);
            out.broadcast(ctx, ctx.round);
        }
        Status::Running
    }

    fn output(&self, _: &NodeContext<'_>, state: PeelState) -> Option<usize> {
        state.layer
    }
}

/// Layer budget `⌊(2/ε)·log₂ n⌋ + 1`.
pub fn layer_budget(n: usize, eps: f64) -> usize {
    ((2.0 / eps) * (n.max(1) as f64).log2()).floor() as usize + 1
}

fn threshold(a: usize, eps: f64) -> usize {
    ((2.0 + eps) * a as f64 + 1e-9).floor() as usize
}

fn check_eps(a: usize, eps: f64) -> Result<()> {
    if a == 0 {
        return Err(Error::InvalidParameter("arboricity bound must be positive".into()));
    }
    if !(eps > 0.0 && eps <= 2.0) {
        return Err(Error::InvalidParameter(format!("eps must be in (0, 2], got {eps}")));
    }
    Ok(())
}

/// Peels, one layer per round, every vertex with at most `⌊(2+ε)a⌋` neighbors
/// outside the earlier layers. Edges are oriented toward the higher layer and
/// within a layer toward the higher ID.
pub fn h_partition(g: &Graph, a: usize, eps: f64) -> Result<HPartition> {
    check_eps(a, eps)?;
    let threshold = threshold(a, eps);
    let budget = layer_budget(g.n(), eps);
    let report = run_sync(&Peeling { threshold }, g, 0, budget + 1)?;
    let remaining: Vec<VertexId> = (0..g.n()).filter(|&v| report.outputs[v].is_none()).collect();
    if !remaining.is_empty() {
        let inside = |v: VertexId| g.neighbors(v).iter().filter(|u| report.outputs[**u].is_none()).count();
        let min_inside = remaining.iter().map(|&v| inside(v)).min().unwrap_or(0);
        if min_inside > threshold {
            return Err(Error::ArboricityViolated { a, threshold, witness: remaining });
        }
        return Err(Error::LayerBudgetExceeded { budget, remaining: remaining.len() });
    }
    let layers: Vec<usize> = report.outputs.iter().map(|l| l.expect("all peeled")).collect();
    let rank: Vec<(usize, VertexId)> = layers.iter().copied().zip(0..).collect();
    let orientation = Orientation::by_rank(g, &rank);
    Ok(HPartition {
        layer_count: layers.iter().copied().max().unwrap_or(0),
        layers,
        threshold,
        orientation,
        stats: RunStats::from_report(&report),
    })
}

// ---------------------------------------------------------------------------
// Forest decomposition

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum ForestMode {
    /// Orient every edge toward the higher ID; `Δ` forests.
    IdOrientation,
    /// Orient by an H-partition; `⌊(2+ε)a⌋` forests.
    HPartition { a: usize, eps: f64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct ForestDecomposition {
    pub labeling: ForestLabeling,
    /// Every edge may take any of the `F` forests.
    pub domains: LabelDomain,
    pub layer_count: Option<usize>,
    pub stats: RunStats,
}

struct ForestLabels<'a> {
    /// Out-edges as `(edge, target)`; `None` means learn them from an ID
    /// exchange.
    out: Option<&'a [Vec<(EdgeId, VertexId)>]>,
    forests: usize,
}

#[derive(Default)]
struct ForestState {
    labels: Vec<(EdgeId, usize)>,
    sent: bool,
}

impl ForestLabels<'_> {
    fn assign(&self, ctx: &NodeContext<'_>, state: &mut ForestState, rng: &mut RandomnessStream, out: &mut Outbox<usize>) {
        let targets: Vec<(EdgeId, VertexId)> = match self.out {
            Some(out_edges) => out_edges[ctx.id].clone(),
            None => ctx
                .graph
                .incident_edges(ctx.id)
                .iter()
                .map(|&e| (e, ctx.graph.other_endpoint(e, ctx.id)))
                .filter(|&(_, u)| u > ctx.id)
                .collect(),
        };
        // uniform injection of the out-edges into 1..=F (partial Fisher–Yates)
        let mut pool: Vec<usize> = (1..=self.forests).collect();
        for (i, &(e, target)) in targets.iter().enumerate() {
            let j = i + rng.draw_uniform((pool.len() - i) as u64) as usize;
            pool.swap(i, j);
            state.labels.push((e, pool[i]));
            out.send(target, pool[i]);
        }
        state.sent = true;
    }
}

impl NodeProgram for ForestLabels<'_> {
    type State = ForestState;
    type Message = usize;
    type Output = Vec<(EdgeId, usize)>;

    fn init(&self, ctx: &NodeContext<'_>, rng: &mut RandomnessStream, out: &mut Outbox<usize>) -> ForestState {
        let mut state = ForestState::default();
        match self.out {
            // announce the ID; the value is irrelevant
            None => out.broadcast(ctx, 0),
            Some(_) => self.assign(ctx, &mut state, rng, out),
        }
        state
    }

    fn step(
        &self,
        ctx: &NodeContext<'_>,
        state: &mut ForestState,
        _: &[(VertexId, usize)],
        rng: &mut RandomnessStream,
        out: &mut Outbox<usize>,
    ) -> Status {
        if !state.sent {
            self.assign(ctx, state, rng, out);
            return Status::Running;
        }
        Status::Halted
    }

    fn output(&self, _: &NodeContext<'_>, state: ForestState) -> Vec<(EdgeId, usize)> {
        state.labels
    }
}

/// Every vertex assigns its out-edges distinct forest numbers, uniformly at
/// random. Any such assignment is a valid decomposition into `F` forests, so
/// every edge's domain is all of `1..=F`.
pub fn forest_decomposition(g: &Graph, mode: ForestMode, seed: u64) -> Result<ForestDecomposition> {
    let (forests, orientation_stats, layer_count, out_edges) = match mode {
        ForestMode::IdOrientation => (g.max_degree().max(1), RunStats::empty(), None, None),
        ForestMode::HPartition { a, eps } => {
            let hp = h_partition(g, a, eps)?;
            let out: Vec<Vec<(EdgeId, VertexId)>> = (0..g.n())
                .map(|v| hp.orientation.out_edges(v).iter().map(|&e| (e, hp.orientation.target(e))).collect())
                .collect();
            (hp.threshold.max(1), hp.stats, Some(hp.layer_count), Some(out))
        }
    };
    let program = ForestLabels { out: out_edges.as_deref(), forests };
    let report = run_sync(&program, g, seed, 3)?;
    let mut edge_labels = vec![0; g.m()];
    let mut sources = vec![0; g.m()];
    for (v, labels) in report.outputs.iter().enumerate() {
        for &(e, label) in labels {
            edge_labels[e] = label;
            sources[e] = v;
        }
    }
    let domains = LabelDomain::new(EntityKind::Edge, forests as u64, forests as u64, vec![(0..forests as u64).collect(); g.m()])?;
    Ok(ForestDecomposition {
        labeling: ForestLabeling { forest_count: forests, edge_labels, sources },
        domains,
        layer_count,
        stats: orientation_stats.then(RunStats::from_report(&report)),
    })
}

// ---------------------------------------------------------------------------
// Bounded-arboricity coloring

#[derive(Clone, Debug, Serialize)]
pub struct ArboricityColoring {
    pub domains: LabelDomain,
    pub k: usize,
    /// Out-degree bound `A = ⌊(2+ε)a⌋`; values are drawn from `0..2A`.
    pub out_degree_bound: usize,
    pub layer_count: usize,
    pub stats: RunStats,
}

struct ParentPruning<'a> {
    children: &'a [Vec<VertexId>],
    k: usize,
    range: u64,
}

impl NodeProgram for ParentPruning<'_> {
    type State = Vec<Option<u64>>;
    type Message = Vec<u64>;
    type Output = Vec<Label>;

    fn init(&self, ctx: &NodeContext<'_>, rng: &mut RandomnessStream, out: &mut Outbox<Vec<u64>>) -> Self::State {
        let draws: Vec<u64> = (0..self.k).map(|_| rng.draw_uniform(self.range)).collect();
        for &child in &self.children[ctx.id] {
            out.send(child, draws.clone());
        }
        draws.into_iter().map(Some).collect()
    }

    fn step(
        &self,
        _: &NodeContext<'_>,
        state: &mut Self::State,
        inbox: &[(VertexId, Vec<u64>)],
        _: &mut RandomnessStream,
        _: &mut Outbox<Vec<u64>>,
    ) -> Status {
        // every message comes from a parent
        for (_, theirs) in inbox {
            for (mine, x) in state.iter_mut().zip(theirs) {
                if *mine == Some(*x) {
                    *mine = None;
                }
            }
        }
        Status::Halted
    }

    fn output(&self, _: &NodeContext<'_>, state: Self::State) -> Vec<Label> {
        state
            .into_iter()
            .enumerate()
            .filter_map(|(i, x)| x.map(|x| Label::new(i as u64, x)))
            .collect()
    }
}

/// Random tuples as in the one-round coloring, but a vertex only discards
/// tuples drawn by its at most `A` parents in an H-partition orientation.
/// Fails with [`Error::EmptyDomain`] when a domain empties.
pub fn arboricity_generic_coloring(g: &Graph, a: usize, eps: f64, c: f64, seed: u64) -> Result<ArboricityColoring> {
    let run = arboricity_generic_coloring_unchecked(g, a, eps, c, seed)?;
    if let Some(vertex) = run.domains.domains().iter().position(Vec::is_empty) {
        return Err(Error::EmptyDomain { vertex, seed });
    }
    Ok(run)
}

pub fn arboricity_generic_coloring_unchecked(
    g: &Graph,
    a: usize,
    eps: f64,
    c: f64,
    seed: u64,
) -> Result<ArboricityColoring> {
    if !(c > 0.0) {
        return Err(Error::InvalidParameter(format!("c must be positive, got {c}")));
    }
    let hp = h_partition(g, a, eps)?;
    let mut children = vec![Vec::new(); g.n()];
    for e in 0..g.m() {
        children[hp.orientation.target(e)].push(hp.orientation.source(e));
    }
    let k = tuple_count(c, g.n());
    let range = 2 * hp.threshold as u64;
    let report = run_sync(&ParentPruning { children: &children, k, range }, g, seed, 1)?;
    let domains = LabelDomain::from_labels(EntityKind::Vertex, k as u64, range, report.outputs.clone())?;
    Ok(ArboricityColoring {
        domains,
        k,
        out_degree_bound: hp.threshold,
        layer_count: hp.layer_count,
        stats: hp.stats.then(RunStats::from_report(&report)),
    })
}
