//! Deterministic synchronous round engine for the LOCAL model.
//!
//! Every node runs the same [`NodeProgram`]. Before the first round each node
//! initializes and may queue messages; in round `t` every running node receives
//! everything sent to it at the end of round `t - 1` (or during init),
//! computes, and queues messages for round `t + 1`. Message size is unbounded
//! and local computation is free. A node that reports [`Status::Halted`] has its
//! final outbox delivered and is never stepped again.

use rand_core::{impls, RngCore};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use privlabel_graph::{Graph, VertexId};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function.
pub fn mix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for an independent sub-computation (a pipeline stage, a parallel
/// execution) derived from a master seed and a salt.
pub fn derive_seed(master_seed: u64, salt: u64) -> u64 {
    mix64(master_seed ^ mix64(salt.wrapping_add(0x5851_F42D_4C95_7F2D)))
}

/// Private randomness of one node.
///
/// A SplitMix64 sequence keyed by `mix64(master_seed + mix64(node_id))`: draw
/// number `i` (from 1) is `mix64(key + i * 0x9E3779B97F4A7C15)` passed through
/// the SplitMix64 finalizer. Replaying the same `(master_seed, node_id)` gives
/// the same sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomnessStream {
    master_seed: u64,
    node_id: u64,
    key: u64,
    counter: u64,
}

impl RandomnessStream {
    pub fn new(master_seed: u64, node_id: u64) -> Self {
        RandomnessStream {
            master_seed,
            node_id,
            key: mix64(master_seed.wrapping_add(mix64(node_id))),
            counter: 0,
        }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn node_id(&self) -> u64 {
        self.node_id
    }

    /// Number of 64-bit draws taken so far.
    pub fn counter(&self) -> u64 {
        self.counter
    }

    /// Uniform integer in `0..bound`. `bound` must be positive.
    pub fn draw_uniform(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        // Lemire's multiply-shift with rejection.
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            let wide = x as u128 * bound as u128;
            if (wide as u64) >= threshold {
                return (wide >> 64) as u64;
            }
        }
    }

    /// Fair coin.
    pub fn draw_bit(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}

impl RngCore for RandomnessStream {
    fn next_u32(&mut self) -> u32 {
        (self.next_u64() >> 32) as u32
    }

    fn next_u64(&mut self) -> u64 {
        self.counter += 1;
        let z = self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN_GAMMA));
        mix64(z)
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        impls::fill_bytes_via_next(self, dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand_core::Error> {
        self.fill_bytes(dest);
        Ok(())
    }
}

pub fn derive_stream(master_seed: u64, node_id: u64) -> RandomnessStream {
    RandomnessStream::new(master_seed, node_id)
}

/// What a node can see about itself: its ID and its neighborhood.
#[derive(Clone, Copy, Debug)]
pub struct NodeContext<'g> {
    pub id: VertexId,
    pub graph: &'g Graph,
    /// Current round, starting at 1; 0 during `init`.
    pub round: usize,
}

impl<'g> NodeContext<'g> {
    pub fn neighbors(&self) -> &'g [VertexId] {
        self.graph.neighbors(self.id)
    }

    pub fn degree(&self) -> usize {
        self.graph.degree(self.id)
    }

    /// Number of nodes; every node is assumed to know `n`.
    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// Messages queued by one node in one round.
#[derive(Debug)]
pub struct Outbox<M> {
    messages: Vec<(VertexId, M)>,
}

impl<M> Default for Outbox<M> {
    fn default() -> Self {
        Outbox { messages: Vec::new() }
    }
}

impl<M: Clone> Outbox<M> {
    pub fn send(&mut self, to: VertexId, message: M) {
        self.messages.push((to, message));
    }

    pub fn broadcast(&mut self, ctx: &NodeContext<'_>, message: M) {
        for &u in ctx.neighbors() {
            self.messages.push((u, message.clone()));
        }
    }

    pub fn len(&self) -> usize {
        self.messages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.messages.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Running,
    Halted,
}

/// A per-node program. `step` sees only the node's own state, its inbox and
/// its own randomness stream.
pub trait NodeProgram: Sync {
    type State: Send;
    type Message: Clone + Send + Sync;
    type Output: Send;

    fn init(
        &self,
        ctx: &NodeContext<'_>,
        rng: &mut RandomnessStream,
        out: &mut Outbox<Self::Message>,
    ) -> Self::State;

    fn step(
        &self,
        ctx: &NodeContext<'_>,
        state: &mut Self::State,
        inbox: &[(VertexId, Self::Message)],
        rng: &mut RandomnessStream,
        out: &mut Outbox<Self::Message>,
    ) -> Status;

    fn output(&self, ctx: &NodeContext<'_>, state: Self::State) -> Self::Output;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("round {round}: node {from} sent to non-neighbor {to}")]
    NotANeighbor { round: usize, from: VertexId, to: VertexId },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport<O> {
    pub rounds: usize,
    pub messages_total: u64,
    /// False when `max_rounds` ran out before every node halted.
    pub complete: bool,
    pub seed: u64,
    pub outputs: Vec<O>,
}

struct Slot<S, M> {
    state: S,
    rng: RandomnessStream,
    inbox: Vec<(VertexId, M)>,
    halted: bool,
}

/// Runs `program` on every vertex of `g` in lock-step rounds until all nodes
/// halt or `max_rounds` rounds have been executed.
pub fn run_sync<P: NodeProgram>(
    program: &P,
    g: &Graph,
    master_seed: u64,
    max_rounds: usize,
) -> Result<RunReport<P::Output>, SimError> {
    let n = g.n();
    let ctx = |id, round| NodeContext { id, graph: g, round };

    let (mut slots, outboxes): (Vec<_>, Vec<_>) = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut rng = derive_stream(master_seed, v as u64);
            let mut out = Outbox::default();
            let state = program.init(&ctx(v, 0), &mut rng, &mut out);
            (Slot { state, rng, inbox: Vec::new(), halted: false }, out)
        })
        .unzip();
    let mut messages_total = deliver(g, 0, outboxes, &mut slots)?;

    let mut rounds = 0;
    while slots.iter().any(|s| !s.halted) && rounds < max_rounds {
        rounds += 1;
        let outboxes: Vec<Outbox<P::Message>> = slots
            .par_iter_mut()
            .enumerate()
            .map(|(v, slot)| {
                let mut out = Outbox::default();
                let inbox = std::mem::take(&mut slot.inbox);
                if !slot.halted {
                    let status =
                        program.step(&ctx(v, rounds), &mut slot.state, &inbox, &mut slot.rng, &mut out);
                    slot.halted = status == Status::Halted;
                }
                out
            })
            .collect();
        messages_total += deliver(g, rounds, outboxes, &mut slots)?;
    }

    let complete = slots.iter().all(|s| s.halted);
    let outputs = slots
        .into_iter()
        .enumerate()
        .map(|(v, s)| program.output(&ctx(v, rounds), s.state))
        .collect();
    Ok(RunReport { rounds, messages_total, complete, seed: master_seed, outputs })
}

fn deliver<S, M>(
    g: &Graph,
    round: usize,
    outboxes: Vec<Outbox<M>>,
    slots: &mut [Slot<S, M>],
) -> Result<u64, SimError> {
    let mut count = 0;
    // Senders in ID order, so every inbox is sorted by sender.
    for (from, out) in outboxes.into_iter().enumerate() {
        for (to, message) in out.messages {
            if !g.has_edge(from, to) {
                return Err(SimError::NotANeighbor { round, from, to });
            }
            count += 1;
            if !slots[to].halted {
                slots[to].inbox.push((from, message));
            }
        }
    }
    Ok(count)
}

/// Rounds and messages of a (possibly multi-stage) distributed computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub rounds: usize,
    pub messages: u64,
    pub complete: bool,
}

impl RunStats {
    pub fn from_report<O>(report: &RunReport<O>) -> Self {
        RunStats { rounds: report.rounds, messages: report.messages_total, complete: report.complete }
    }

    /// Stage `next` runs after `self`.
    pub fn then(self, next: RunStats) -> RunStats {
        RunStats {
            rounds: self.rounds + next.rounds,
            messages: self.messages + next.messages,
            complete: self.complete && next.complete,
        }
    }

    /// `other` runs simultaneously with `self`.
    pub fn alongside(self, other: RunStats) -> RunStats {
        RunStats {
            rounds: self.rounds.max(other.rounds),
            messages: self.messages + other.messages,
            complete: self.complete && other.complete,
        }
    }

    pub fn empty() -> Self {
        RunStats { rounds: 0, messages: 0, complete: true }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use privlabel_graph::{generate, GeneratorKind, GeneratorSpec};
    use rand::Rng;

    /// Floods the smallest `(value, id)` seen; every node learns the minimum of
    /// its radius-`radius` ball.
    struct FloodMin {
        radius: usize,
        values: Vec<u64>,
    }

    impl NodeProgram for FloodMin {
        type State = (u64, usize);
        type Message = u64;
        type Output = u64;

        fn init(&self, ctx: &NodeContext<'_>, _: &mut RandomnessStream, out: &mut Outbox<u64>) -> (u64, usize) {
            let v = self.values[ctx.id];
            if self.radius > 0 {
                out.broadcast(ctx, v);
            }
            (v, 0)
        }

        fn step(
            &self,
            ctx: &NodeContext<'_>,
            state: &mut (u64, usize),
            inbox: &[(VertexId, u64)],
            _: &mut RandomnessStream,
            out: &mut Outbox<u64>,
        ) -> Status {
            state.0 = inbox.iter().map(|m| m.1).fold(state.0, u64::min);
            state.1 += 1;
            if state.1 >= self.radius {
                return Status::Halted;
            }
            out.broadcast(ctx, state.0);
            Status::Running
        }

        fn output(&self, _: &NodeContext<'_>, state: (u64, usize)) -> u64 {
            state.0
        }
    }

    struct Chatter;

    impl NodeProgram for Chatter {
        type State = u64;
        type Message = u64;
        type Output = u64;

        fn init(&self, ctx: &NodeContext<'_>, rng: &mut RandomnessStream, out: &mut Outbox<u64>) -> u64 {
            let x = rng.gen::<u64>();
            out.broadcast(ctx, x);
            x
        }

        fn step(
            &self,
            ctx: &NodeContext<'_>,
            state: &mut u64,
            inbox: &[(VertexId, u64)],
            rng: &mut RandomnessStream,
            out: &mut Outbox<u64>,
        ) -> Status {
            for (from, x) in inbox {
                *state = mix64(*state ^ x ^ *from as u64);
            }
            if rng.gen_bool(0.3) {
                return Status::Halted;
            }
            out.broadcast(ctx, *state);
            Status::Running
        }

        fn output(&self, _: &NodeContext<'_>, state: u64) -> u64 {
            state
        }
    }

    struct Rogue;

    impl NodeProgram for Rogue {
        type State = ();
        type Message = ();
        type Output = ();
        fn init(&self, _: &NodeContext<'_>, _: &mut RandomnessStream, out: &mut Outbox<()>) {
            out.send(2, ());
        }
        fn step(&self, _: &NodeContext<'_>, _: &mut (), _: &[(VertexId, ())], _: &mut RandomnessStream, _: &mut Outbox<()>) -> Status {
            Status::Halted
        }
        fn output(&self, _: &NodeContext<'_>, _: ()) {}
    }

    fn gnp(n: usize, p: f64, seed: u64) -> Graph {
        generate(&GeneratorSpec::new(GeneratorKind::Gnp { n, p, max_degree: None }, seed))
            .unwrap()
            .graph
    }

    #[test]
    fn empty_graph_takes_no_rounds() {
        let report = run_sync(&Chatter, &Graph::empty(0), 1, 10).unwrap();
        assert_eq!(report.rounds, 0);
        assert!(report.outputs.is_empty() && report.complete);
    }

    #[test]
    fn same_seed_same_report() {
        let g = gnp(60, 0.1, 4);
        let a = run_sync(&Chatter, &g, 11, 50).unwrap();
        let b = run_sync(&Chatter, &g, 11, 50).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let c = run_sync(&Chatter, &g, 12, 50).unwrap();
        assert_ne!(a.outputs, c.outputs);
    }

    #[test]
    fn max_rounds_marks_incomplete() {
        let g = gnp(10, 0.5, 1);
        let prog = FloodMin { radius: 5, values: (0..10).collect() };
        let report = run_sync(&prog, &g, 0, 3).unwrap();
        assert_eq!(report.rounds, 3);
        assert!(!report.complete);
    }

    #[test]
    fn sending_to_non_neighbor_is_an_error() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(run_sync(&Rogue, &g, 0, 1), Err(SimError::NotANeighbor { .. })));
    }

    #[test]
    fn flood_reaches_exactly_the_ball() {
        let g = Graph::from_edges(6, (1..6).map(|v| (v - 1, v))).unwrap();
        let prog = FloodMin { radius: 2, values: vec![9, 8, 7, 6, 5, 4] };
        let report = run_sync(&prog, &g, 0, 10).unwrap();
        assert_eq!(report.outputs, vec![7, 6, 5, 4, 4, 4]);
        assert_eq!(report.rounds, 2);
    }

    #[test]
    fn round_isolation() {
        // Changing state outside the radius-R ball of v cannot change v's
        // output after R rounds.
        let g = Graph::from_edges(12, (1..12).map(|v| (v - 1, v))).unwrap();
        let radius = 3;
        let base: Vec<u64> = (100..112).collect();
        let mut mutated = base.clone();
        mutated[11] = 0;
        mutated[10] = 1;
        let a = run_sync(&FloodMin { radius, values: base }, &g, 0, 10).unwrap();
        let b = run_sync(&FloodMin { radius, values: mutated }, &g, 0, 10).unwrap();
        // vertices 0..=6 are at distance > 3 from vertices 10 and 11
        assert_eq!(a.outputs[..7], b.outputs[..7]);
        assert_ne!(a.outputs[8], b.outputs[8]);
    }

    #[test]
    fn streams_are_replayable_and_distinct() {
        let mut a = derive_stream(1, 0);
        let mut b = derive_stream(1, 0);
        let xs: Vec<u64> = (0..16).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..16).map(|_| b.next_u64()).collect();
        assert_eq!(xs, ys);
        assert_eq!(a.counter(), 16);

        let mut differing = 0;
        for seed in 0..10_000u64 {
            let x = derive_stream(seed, 0).next_u64();
            let y = derive_stream(seed, 1).next_u64();
            differing += (x != y) as u32;
        }
        assert_eq!(differing, 10_000);
    }

    #[test]
    fn draw_uniform_bound_one_is_zero() {
        let mut s = derive_stream(5, 5);
        assert!((0..1000).all(|_| s.draw_uniform(1) == 0));
        let mut counts = [0u32; 3];
        for _ in 0..30_000 {
            counts[s.draw_uniform(3) as usize] += 1;
        }
        assert!(counts.iter().all(|&c| (9_000..11_000).contains(&c)), "{counts:?}");
    }

    #[test]
    fn stats_composition() {
        let a = RunStats { rounds: 2, messages: 10, complete: true };
        let b = RunStats { rounds: 3, messages: 5, complete: false };
        assert_eq!(a.then(b), RunStats { rounds: 5, messages: 15, complete: false });
        assert_eq!(a.alongside(b).rounds, 3);
    }
}
