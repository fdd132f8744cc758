//! Plain-text edge lists.
//!
//! One `u v` pair per line. Blank lines and lines starting with `#`, `%` or
//! `c` are ignored. An optional header `p <n> <m>` (or DIMACS-style
//! `p edge <n> <m>`) fixes the vertex count; without it `n` is one more than
//! the largest ID seen.

use std::fmt::Write as _;

use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub fn load_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n = None;
    let mut pairs = Vec::new();
    let mut max_id = None::<usize>;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with(['#', '%', 'c']) {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields[0] == "p" {
            if declared_n.is_some() || !pairs.is_empty() {
                return Err(GraphError::Parse { line, message: "header must come first".into() });
            }
            let numbers = match fields.as_slice() {
                [_, n, m] => [*n, *m],
                [_, _, n, m] => [*n, *m],
                _ => return Err(GraphError::Parse { line, message: "expected `p <n> <m>`".into() }),
            };
            let n = parse_id(numbers[0], line)?;
            parse_id(numbers[1], line)?;
            declared_n = Some(n);
            continue;
        }
        let [a, b] = fields.as_slice() else {
            return Err(GraphError::Parse { line, message: format!("expected `u v`, got {trimmed:?}") });
        };
        let (u, v) = (parse_id(a, line)?, parse_id(b, line)?);
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if let Some(n) = declared_n {
            if let Some(bad) = [u, v].into_iter().find(|&x| x >= n) {
                return Err(GraphError::VertexOutOfRange { line, vertex: bad, n });
            }
        }
        max_id = max_id.max(Some(u.max(v)));
        pairs.push((u, v));
    }
    let n = declared_n.unwrap_or_else(|| max_id.map_or(0, |x| x + 1));
    Graph::from_edges(n, pairs)
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| GraphError::Parse {
        line,
        message: format!("not a non-negative integer: {token:?}"),
    })
}

/// Canonical form: header, then one `u v` line per edge with `u < v` in
/// lexicographic order. Loading this text back gives the same graph, and a
/// canonical input file round-trips byte for byte.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
