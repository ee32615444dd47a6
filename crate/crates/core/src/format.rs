//! Text formats for graphs and partitions.
//!
//! Graph files start with `p <n> <m>` followed by `m` lines `u v`
//! (`0 <= u < v < n` on write). Partition files hold one part per line,
//! `L: a b c | R: d e`. In both, `#` starts a comment and blank lines are
//! skipped.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::partition::{Biclique, BicliquePartition};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-empty, comment-stripped lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, found {token:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `p <n> <m>` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [p, n, m] = fields[..] else {
        return Err(parse_err(hline, "header must be `p <n> <m>`"));
    };
    if p != "p" {
        return Err(parse_err(hline, "header must start with `p`"));
    }
    let n = parse_number(hline, n)?;
    let m = parse_number(hline, m)?;

    let mut seen: HashSet<(Vertex, Vertex)> = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(parse_err(line, "edge lines must be `u v`"));
        };
        let (u, v) = (parse_number(line, a)?, parse_number(line, b)?);
        if u >= n || v >= n {
            return Err(parse_err(line, format!("edge {u} {v} out of range for {n} vertices")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_side(line: usize, text: &str, tag: &str) -> Result<VertexSet> {
    let rest = text.trim().strip_prefix(tag).ok_or_else(|| parse_err(line, format!("expected `{tag}`")))?;
    let ids = rest.split_whitespace().map(|t| parse_number(line, t)).collect::<Result<Vec<_>>>()?;
    let set = VertexSet::from_unsorted(ids.clone());
    if set.len() != ids.len() {
        return Err(parse_err(line, "repeated vertex within a side"));
    }
    Ok(set)
}

pub fn parse_partition(text: &str) -> Result<BicliquePartition> {
    let mut parts = Vec::new();
    for (line, body) in content_lines(text) {
        let (l, r) = body.split_once('|').ok_or_else(|| parse_err(line, "part lines must be `L: ... | R: ...`"))?;
        let left = parse_side(line, l, "L:")?;
        let right = parse_side(line, r, "R:")?;
        if left.is_empty() || right.is_empty() {
            return Err(parse_err(line, "both sides of a part must be nonempty"));
        }
        parts.push(Biclique::new(left, right));
    }
    BicliquePartition::new(parts)
}

pub fn write_partition(p: &BicliquePartition) -> String {
    let mut out = String::new();
    for b in p.parts() {
        out.push_str("L:");
        for v in b.left().iter() {
            write!(out, " {v}").unwrap();
        }
        out.push_str(" | R:");
        for v in b.right().iter() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}
