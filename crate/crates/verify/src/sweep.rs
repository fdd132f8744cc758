use serde::Serialize;

use privlabel_graph::{EdgeId, Graph, VertexId};

use crate::verdict::{Verdict, Witness};

/// Union-find that can undo its latest unions.
struct Undoable {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl Undoable {
    fn new(n: usize) -> Self {
        Undoable { parent: (0..n).collect(), size: vec![1; n], history: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push(b);
        true
    }

    fn undo(&mut self) {
        let b = self.history.pop().expect("nothing to undo");
        let a = self.parent[b];
        self.size[a] -= self.size[b];
        self.parent[b] = b;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    /// Complete assignments examined.
    pub assignments: u64,
    pub verdict: Verdict,
}

struct Sweep<'a> {
    g: &'a Graph,
    out: Vec<(VertexId, EdgeId)>,
    forests: Vec<Undoable>,
    count: u64,
}

impl Sweep<'_> {
    /// Assigns labels to `out[i..]`; `used` marks labels taken by the current
    /// vertex's earlier out-edges.
    fn go(&mut self, i: usize, used: &mut Vec<bool>) -> Option<Witness> {
        if i == self.out.len() {
            self.count += 1;
            return None;
        }
        let (v, e) = self.out[i];
        let fresh_vertex = i == 0 || self.out[i - 1].0 != v;
        let saved = if fresh_vertex { Some(std::mem::replace(used, vec![false; used.len()])) } else { None };
        let (a, b) = self.g.edge(e);
        let mut found = None;
        for class in 0..self.forests.len() {
            if used[class] {
                continue;
            }
            if !self.forests[class].union(a, b) {
                found = Some(Witness::Cycle { class: class + 1, edge: e });
                break;
            }
            used[class] = true;
            found = self.go(i + 1, used);
            used[class] = false;
            self.forests[class].undo();
            if found.is_some() {
                break;
            }
        }
        if let Some(s) = saved {
            *used = s;
        }
        found
    }
}

/// Enumerates every labeling in which each vertex gives its out-edges
/// (edge `e` leaves `sources[e]`) pairwise distinct labels from
/// `1..=forest_count`, and checks that every class is a forest. Passing means
/// every such labeling is valid.
pub fn forest_assignment_sweep(g: &Graph, sources: &[VertexId], forest_count: usize) -> SweepOutcome {
    let mut out: Vec<(VertexId, EdgeId)> = (0..g.m()).map(|e| (sources[e], e)).collect();
    out.sort_unstable();
    let mut sweep = Sweep { g, out, forests: (0..forest_count).map(|_| Undoable::new(g.n())).collect(), count: 0 };
    let witness = sweep.go(0, &mut vec![false; forest_count]);
    let verdict = match witness {
        Some(w) => Verdict::fail(w),
        None => Verdict::Pass,
    };
    SweepOutcome { assignments: sweep.count, verdict }
}
