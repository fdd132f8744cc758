//! Generic vertex colorings: each vertex ends with a set of labels, and any
//! joint choice of one label per vertex is a valid coloring.

use serde::Serialize;

use privlabel_graph::{EntityKind, Graph, Label, LabelDomain, Orientation, VertexId};

use crate::coverfree::{residual_elements, smallest_prime_geq, FieldError, PolyFamily};
use crate::error::{Error, Result};
use crate::sim::{run_sync, NodeContext, NodeProgram, Outbox, RandomnessStream, RunStats, Status};

/// `k = ⌈c · log₂ n⌉`, at least 1.
pub fn tuple_count(c: f64, n: usize) -> usize {
    let k = (c * (n.max(1) as f64).log2()).ceil();
    (k as usize).max(1)
}

/// Number of times `log₂` must be applied to `n` to reach a value ≤ 2.
pub fn log_star(n: usize) -> usize {
    let mut x = n as f64;
    let mut count = 0;
    while x > 2.0 {
        x = x.log2();
        count += 1;
    }
    count
}

/// `⌈x^(1/k)⌉` for integers.
pub fn ceil_root(x: u64, k: u32) -> u64 {
    if x <= 1 {
        return x;
    }
    let mut r = (x as f64).powf(1.0 / k as f64).round() as u64;
    let pow = |b: u64| (0..k).try_fold(1u64, |acc, _| acc.checked_mul(b));
    while r > 1 && pow(r - 1).map_or(false, |p| p >= x) {
        r -= 1;
    }
    while pow(r).map_or(false, |p| p < x) {
        r += 1;
    }
    r
}

fn check_no_residual_errors(g: &Graph, colors: &[u64], outputs: Vec<Result<Vec<u64>, FieldError>>) -> Result<Vec<Vec<u64>>> {
    outputs
        .into_iter()
        .enumerate()
        .map(|(v, out)| match out {
            Ok(d) => Ok(d),
            Err(FieldError::SelfCover(_)) => {
                let u = g.neighbors(v).iter().copied().find(|&u| colors[u] == colors[v]).unwrap_or(v);
                Err(Error::ImproperInput(v.min(u), v.max(u)))
            }
            Err(e) => Err(e.into()),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// 3-coloring of oriented forests

#[derive(Clone, Debug, Serialize)]
pub struct ForestColoring {
    /// Colors in `{0, 1, 2}`.
    pub colors: Vec<u8>,
    /// Bit-reduction iterations before the final shift-down phases.
    pub reduction_iterations: usize,
    pub stats: RunStats,
}

struct ColeVishkin<'a> {
    parent: &'a [Option<VertexId>],
    iterations: usize,
}

impl ColeVishkin<'_> {
    fn parent_color(&self, v: VertexId, inbox: &[(VertexId, u64)]) -> Option<u64> {
        let p = self.parent[v]?;
        inbox.iter().find(|m| m.0 == p).map(|m| m.1)
    }
}

impl NodeProgram for ColeVishkin<'_> {
    type State = u64;
    type Message = u64;
    type Output = u8;

    fn init(&self, ctx: &NodeContext<'_>, _: &mut RandomnessStream, out: &mut Outbox<u64>) -> u64 {
        let color = ctx.id as u64;
        out.broadcast(ctx, color);
        color
    }

    fn step(
        &self,
        ctx: &NodeContext<'_>,
        color: &mut u64,
        inbox: &[(VertexId, u64)],
        _: &mut RandomnessStream,
        out: &mut Outbox<u64>,
    ) -> Status {
        let v = ctx.id;
        let t = ctx.round;
        if t <= self.iterations {
            // lowest differing bit against the parent; roots use bit 0
            let i = match self.parent_color(v, inbox) {
                Some(pc) => (*color ^ pc).trailing_zeros() as u64,
                None => 0,
            };
            *color = 2 * i + ((*color >> i) & 1);
        } else {
            let offset = t - self.iterations - 1;
            let target = 5 - (offset / 2) as u64;
            if offset % 2 == 0 {
                // shift down: take the parent's color; a root picks a fresh one
                *color = match self.parent_color(v, inbox) {
                    Some(pc) => pc,
                    None => (0..3).find(|&x| x != *color).expect("three colors"),
                };
            } else if *color == target {
                let used: Vec<u64> = inbox.iter().map(|m| m.1).collect();
                *color = (0..3).find(|x| !used.contains(x)).expect("at most two neighbor colors");
            }
            if offset == 5 {
                return Status::Halted;
            }
        }
        out.broadcast(ctx, *color);
        Status::Running
    }

    fn output(&self, _: &NodeContext<'_>, color: u64) -> u8 {
        color as u8
    }
}

fn cole_vishkin_iterations(n: usize) -> usize {
    let mut range = n as u64;
    let mut iterations = 0;
    while range > 6 {
        let bits = 64 - (range - 1).leading_zeros() as u64;
        range = 2 * bits;
        iterations += 1;
    }
    iterations
}

/// Proper 3-coloring of a forest whose edges point from child to parent.
/// Takes `T + 6` rounds where `T` bit-reduction steps bring IDs below 6.
pub fn cole_vishkin_3coloring(g: &Graph, orientation: &Orientation, max_rounds: usize) -> Result<ForestColoring> {
    if let Some(v) = (0..g.n()).find(|&v| orientation.out_degree(v) > 1) {
        return Err(Error::NotAForest { vertex: v, out_degree: orientation.out_degree(v) });
    }
    if !orientation.is_acyclic() {
        return Err(Error::InvalidParameter("orientation has a directed cycle".into()));
    }
    let parent: Vec<Option<VertexId>> = (0..g.n()).map(|v| orientation.parent(v)).collect();
    let iterations = cole_vishkin_iterations(g.n());
    let report = run_sync(&ColeVishkin { parent: &parent, iterations }, g, 0, max_rounds)?;
    if !report.complete {
        return Err(Error::Incomplete { rounds: report.rounds, seed: 0 });
    }
    Ok(ForestColoring {
        stats: RunStats::from_report(&report),
        colors: report.outputs,
        reduction_iterations: iterations,
    })
}

/// `{<i, φ(v)> : 0 ≤ i < delta}` for every vertex: palette `3·delta`.
pub fn expand_to_generic(colors: &[u8], delta: usize) -> Result<LabelDomain> {
    if delta == 0 {
        return Err(Error::InvalidParameter("delta must be positive".into()));
    }
    let labels = colors
        .iter()
        .map(|&c| (0..delta as u64).map(|i| Label::new(i, c as u64)).collect())
        .collect();
    Ok(LabelDomain::from_labels(EntityKind::Vertex, delta as u64, 3, labels)?)
}

// ---------------------------------------------------------------------------
// One-round random coloring

#[derive(Clone, Debug, Serialize)]
pub struct RandomColoring {
    pub domains: LabelDomain,
    pub k: usize,
    /// Values are drawn from `0..2·delta`.
    pub delta: usize,
    pub stats: RunStats,
}

struct RandomTuples {
    k: usize,
    range: u64,
}

impl NodeProgram for RandomTuples {
    type State = Vec<Option<u64>>;
    type Message = Vec<u64>;
    type Output = Vec<Label>;

    fn init(&self, ctx: &NodeContext<'_>, rng: &mut RandomnessStream, out: &mut Outbox<Vec<u64>>) -> Self::State {
        let draws: Vec<u64> = (0..self.k).map(|_| rng.draw_uniform(self.range)).collect();
        out.broadcast(ctx, draws.clone());
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

fn first_empty(domains: &LabelDomain) -> Option<VertexId> {
    domains.domains().iter().position(Vec::is_empty)
}

/// Every vertex draws `k = ⌈c·log₂ n⌉` tuples `<i, x_i>` with `x_i` uniform in
/// `[2Δ]`, sends them to its neighbors, and drops every tuple a neighbor also
/// drew. One round.
///
/// An emptied domain fails the run with [`Error::EmptyDomain`]; use
/// [`generic_random_coloring_unchecked`] to inspect such runs.
pub fn generic_random_coloring(g: &Graph, c: f64, seed: u64) -> Result<RandomColoring> {
    let run = generic_random_coloring_unchecked(g, c, seed)?;
    if let Some(vertex) = first_empty(&run.domains) {
        return Err(Error::EmptyDomain { vertex, seed });
    }
    Ok(run)
}

pub fn generic_random_coloring_unchecked(g: &Graph, c: f64, seed: u64) -> Result<RandomColoring> {
    if !(c > 0.0) {
        return Err(Error::InvalidParameter(format!("c must be positive, got {c}")));
    }
    let k = tuple_count(c, g.n());
    let delta = g.max_degree().max(1);
    let range = 2 * delta as u64;
    let report = run_sync(&RandomTuples { k, range }, g, seed, 1)?;
    let domains = LabelDomain::from_labels(EntityKind::Vertex, k as u64, range, report.outputs.clone())?;
    Ok(RandomColoring { domains, k, delta, stats: RunStats::from_report(&report) })
}

// ---------------------------------------------------------------------------
// Cover-free reductions

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Keep {
    Smallest,
    All,
}

struct ReduceRound<'a> {
    family: PolyFamily<u64>,
    colors: &'a [u64],
    rho: usize,
    keep: Keep,
}

impl NodeProgram for ReduceRound<'_> {
    type State = Option<Result<Vec<u64>, FieldError>>;
    type Message = u64;
    type Output = Result<Vec<u64>, FieldError>;

    fn init(&self, ctx: &NodeContext<'_>, _: &mut RandomnessStream, out: &mut Outbox<u64>) -> Self::State {
        out.broadcast(ctx, self.colors[ctx.id]);
        None
    }

    fn step(
        &self,
        ctx: &NodeContext<'_>,
        state: &mut Self::State,
        inbox: &[(VertexId, u64)],
        _: &mut RandomnessStream,
        _: &mut Outbox<u64>,
    ) -> Status {
        let others: Vec<u64> = inbox.iter().map(|m| m.1).collect();
        let residual = residual_elements(&self.family, self.colors[ctx.id], &others, self.rho);
        *state = Some(residual.map(|mut r| {
            if self.keep == Keep::Smallest {
                r.truncate(1);
            }
            r
        }));
        Status::Halted
    }

    fn output(&self, _: &NodeContext<'_>, state: Self::State) -> Self::Output {
        state.unwrap_or_else(|| Ok(Vec::new()))
    }
}

fn reduce(
    g: &Graph,
    colors: &[u64],
    family: PolyFamily<u64>,
    rho: usize,
    keep: Keep,
) -> Result<(Vec<Vec<u64>>, RunStats)> {
    let palette = colors.iter().max().map_or(0, |&c| c + 1);
    if palette > family.len() {
        return Err(Error::InvalidParameter(format!(
            "{palette} input colors exceed the {} sets of the family",
            family.len()
        )));
    }
    if family.cover_free_degree(rho as u64) < g.max_degree() as u64 {
        return Err(Error::InvalidParameter(format!(
            "family (d={}, q={}) tolerates degree {} < {}",
            family.degree(),
            family.q(),
            family.cover_free_degree(rho as u64),
            g.max_degree()
        )));
    }
    let report = run_sync(&ReduceRound { family, colors, rho, keep }, g, 0, 1)?;
    let stats = RunStats::from_report(&report);
    let out = check_no_residual_errors(g, colors, report.outputs)?;
    Ok((out, stats))
}

/// One Linial round: every vertex exchanges its color and keeps the smallest
/// element of its own set not covered by any neighbor's set.
pub fn linial_reduce_round(g: &Graph, current: &[u64], family: &PolyFamily<u64>) -> Result<(Vec<u64>, RunStats)> {
    let (out, stats) = reduce(g, current, *family, 0, Keep::Smallest)?;
    let colors = out
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.first().copied().ok_or(Error::NoResidual { vertex: v }))
        .collect::<Result<_>>()?;
    Ok((colors, stats))
}

/// One executed reduction: `palette_in` colors mapped to `q²` using
/// polynomials of degree at most `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub palette_in: u64,
    pub degree: u32,
    pub q: u64,
}

/// Cheapest family able to reduce `palette` colors at maximum degree `delta`,
/// or `None` when no choice shrinks the palette.
pub fn plan_reduction(palette: u64, delta: usize) -> Option<ReductionStep> {
    let delta = delta.max(1) as u64;
    (1..=3u32)
        .map(|d| {
            let floor = d as u64 * (delta + 1) + 1;
            let q = smallest_prime_geq(floor.max(ceil_root(palette, d + 1)));
            ReductionStep { palette_in: palette, degree: d, q }
        })
        .min_by_key(|s| s.q * s.q)
        .filter(|s| s.q * s.q < palette)
}

/// Runs reduction rounds from the ID coloring while the palette exceeds
/// `stop_at` and can still shrink.
fn reduce_ids(g: &Graph, stop_at: u64) -> Result<(Vec<u64>, u64, Vec<ReductionStep>, RunStats)> {
    let mut colors: Vec<u64> = (0..g.n() as u64).collect();
    let mut palette = g.n().max(1) as u64;
    let mut schedule = Vec::new();
    let mut stats = RunStats::empty();
    while palette > stop_at {
        let Some(step) = plan_reduction(palette, g.max_degree()) else { break };
        let family = PolyFamily::new(step.degree, step.q)?;
        let (next, s) = linial_reduce_round(g, &colors, &family)?;
        colors = next;
        palette = step.q * step.q;
        stats = stats.then(s);
        schedule.push(step);
    }
    Ok((colors, palette, schedule, stats))
}

#[derive(Clone, Debug, Serialize)]
pub struct Delta2Coloring {
    pub domains: LabelDomain,
    /// Prime of the final quadratic family; the palette is its square.
    pub q_final: u64,
    pub schedule: Vec<ReductionStep>,
    pub stats: RunStats,
}

/// Deterministic generic `O(Δ²)`-coloring: Linial reductions from the IDs
/// until at most `q³` colors remain for `q` the least prime `≥ 3Δ`, then one
/// round with quadratics over GF(q) in which every vertex keeps all elements
/// of its set that no neighbor's set contains (at least `Δ` of them).
pub fn generic_delta2_coloring(g: &Graph) -> Result<Delta2Coloring> {
    generic_delta2_coloring_with_degree_bound(g, g.max_degree())
}

/// As [`generic_delta2_coloring`] with `Δ` replaced by a declared bound
/// `delta ≥ Δ(g)`; every domain then has at least `delta` labels.
pub fn generic_delta2_coloring_with_degree_bound(g: &Graph, delta: usize) -> Result<Delta2Coloring> {
    if delta < g.max_degree() {
        return Err(Error::InvalidParameter(format!(
            "degree bound {delta} is below the maximum degree {}",
            g.max_degree()
        )));
    }
    let delta = delta.max(1) as u64;
    let target = smallest_prime_geq((3 * delta).max(2));
    let (colors, palette, schedule, stats) = reduce_ids(g, target.pow(3))?;
    let q_final = smallest_prime_geq((3 * delta).max(2).max(ceil_root(palette, 3)));
    let family = PolyFamily::new(2, q_final)?;
    let (domains, last) = reduce(g, &colors, family, 0, Keep::All)?;
    Ok(Delta2Coloring {
        domains: LabelDomain::new(EntityKind::Vertex, q_final * q_final, q_final, domains)?,
        q_final,
        schedule,
        stats: stats.then(last),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DefectiveColoring {
    pub domains: LabelDomain,
    pub p: usize,
    pub q_final: u64,
    pub schedule: Vec<ReductionStep>,
    /// Largest `|{u ∈ Γ(v) : x ∈ D(u)}|` over all `v` and `x ∈ D(v)`.
    pub worst_case_defect: usize,
    pub stats: RunStats,
}

/// Generic `p`-defective coloring: proper Linial reductions, then a single
/// round with quadratics over GF(q), `q ≥ 3Δ/(p+1)`, in which a vertex keeps
/// every element of its set contained in at most `p` neighbor sets.
pub fn generic_defective_coloring(g: &Graph, p: usize) -> Result<DefectiveColoring> {
    let delta = g.max_degree();
    if p < 1 || p > delta {
        return Err(Error::InvalidParameter(format!("p must be in [1, {delta}], got {p}")));
    }
    let base = (3 * delta as u64).div_ceil(p as u64 + 1).max(2);
    let target = smallest_prime_geq(base);
    let (colors, palette, schedule, stats) = reduce_ids(g, target.pow(3))?;
    let q_final = smallest_prime_geq(base.max(ceil_root(palette, 3)));
    let family = PolyFamily::new(2, q_final)?;
    let (domains, last) = reduce(g, &colors, family, p, Keep::All)?;
    let domains = LabelDomain::new(EntityKind::Vertex, q_final * q_final, q_final, domains)?;
    let worst_case_defect = worst_case_defect(g, &domains);
    Ok(DefectiveColoring { domains, p, q_final, schedule, worst_case_defect, stats: stats.then(last) })
}

fn worst_case_defect(g: &Graph, domains: &LabelDomain) -> usize {
    (0..g.n())
        .flat_map(|v| {
            domains
                .domain(v)
                .iter()
                .map(move |&x| g.neighbors(v).iter().filter(|&&u| domains.contains(u, x)).count())
        })
        .max()
        .unwrap_or(0)
}
