//! Vertex orderings: LexBFS by partition refinement, perfect elimination
//! ordering checks and chordality recognition.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A bijection between positions `0..n` and the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<Vertex>,
    position: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(order: Vec<Vertex>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::NotPermutation { n });
            }
            position[v] = i;
        }
        Ok(Self { order, position })
    }

    pub fn identity(n: usize) -> Self {
        Self { order: (0..n).collect(), position: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertex at position `i` (0-based).
    pub fn vertex(&self, i: usize) -> Vertex {
        self.order[i]
    }

    /// Position of `v` (0-based).
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.order
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.order.iter().copied()
    }

    pub fn reversed(&self) -> Self {
        let n = self.len();
        let order: Vec<_> = self.order.iter().rev().copied().collect();
        let position = self.position.iter().map(|&p| n - 1 - p).collect();
        Self { order, position }
    }

    fn check_against(&self, g: &Graph) -> Result<()> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(Error::NotPermutation { n: g.n() })
        }
    }

    /// Neighbors of `v` that come after `v` in this ordering, in ordering order.
    pub fn later_neighbors(&self, g: &Graph, v: Vertex) -> Vec<Vertex> {
        let pv = self.position[v];
        let mut out: Vec<_> = g.neighbors(v).iter().copied().filter(|&u| self.position[u] > pv).collect();
        out.sort_unstable_by_key(|&u| self.position[u]);
        out
    }
}

const NIL: usize = usize::MAX;

#[derive(Clone, Copy)]
struct Class {
    head: usize,
    tail: usize,
    prev: usize,
    next: usize,
    len: usize,
    stamp: usize,
    twin: usize,
}

/// Ordered partition of the unnumbered vertices. Each class is a linked list
/// kept in increasing vertex id; class order encodes label rank.
struct Refinement {
    classes: Vec<Class>,
    first: usize,
    vnext: Vec<usize>,
    vprev: Vec<usize>,
    vclass: Vec<usize>,
}

impl Refinement {
    fn new(n: usize) -> Self {
        Self {
            classes: Vec::with_capacity(2 * n),
            first: NIL,
            vnext: vec![NIL; n],
            vprev: vec![NIL; n],
            vclass: vec![NIL; n],
        }
    }

    /// Allocates an empty class placed directly before `before` (or at the
    /// end when `before` is NIL).
    fn insert_class_before(&mut self, before: usize) -> usize {
        let id = self.classes.len();
        let prev = if before == NIL {
            let mut last = self.first;
            while last != NIL && self.classes[last].next != NIL {
                last = self.classes[last].next;
            }
            last
        } else {
            self.classes[before].prev
        };
        self.classes.push(Class { head: NIL, tail: NIL, prev, next: before, len: 0, stamp: 0, twin: NIL });
        if prev == NIL {
            self.first = id;
        } else {
            self.classes[prev].next = id;
        }
        if before != NIL {
            self.classes[before].prev = id;
        }
        id
    }

    fn unlink_class(&mut self, c: usize) {
        let Class { prev, next, .. } = self.classes[c];
        if prev == NIL {
            self.first = next;
        } else {
            self.classes[prev].next = next;
        }
        if next != NIL {
            self.classes[next].prev = prev;
        }
    }

    fn push_back(&mut self, c: usize, v: Vertex) {
        let tail = self.classes[c].tail;
        self.vprev[v] = tail;
        self.vnext[v] = NIL;
        if tail == NIL {
            self.classes[c].head = v;
        } else {
            self.vnext[tail] = v;
        }
        self.classes[c].tail = v;
        self.classes[c].len += 1;
        self.vclass[v] = c;
    }

    /// Detaches `v` from its class, dropping the class if it empties.
    fn remove(&mut self, v: Vertex) {
        let c = self.vclass[v];
        let (p, nx) = (self.vprev[v], self.vnext[v]);
        if p == NIL {
            self.classes[c].head = nx;
        } else {
            self.vnext[p] = nx;
        }
        if nx == NIL {
            self.classes[c].tail = p;
        } else {
            self.vprev[nx] = p;
        }
        self.classes[c].len -= 1;
        self.vclass[v] = NIL;
        if self.classes[c].len == 0 {
            self.unlink_class(c);
        }
    }
}

/// Lexicographic breadth-first search from `start`.
///
/// Among unnumbered vertices with the lexicographically largest label the
/// smallest vertex id is numbered next. Runs in O(n + m).
pub fn lexbfs(g: &Graph, start: Vertex) -> Result<VertexOrdering> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    g.check_vertex(start)?;

    let mut r = Refinement::new(n);
    let head = r.insert_class_before(NIL);
    r.push_back(head, start);
    if n > 1 {
        let rest = r.insert_class_before(NIL);
        for v in (0..n).filter(|&v| v != start) {
            r.push_back(rest, v);
        }
    }

    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 1..=n {
        let u = r.classes[r.first].head;
        r.remove(u);
        numbered[u] = true;
        order.push(u);

        for &w in g.neighbors(u) {
            if numbered[w] {
                continue;
            }
            let c = r.vclass[w];
            if r.classes[c].stamp != step {
                let twin = r.insert_class_before(c);
                r.classes[c].stamp = step;
                r.classes[c].twin = twin;
                // A freshly created class must never be split again this step.
                r.classes[twin].stamp = step;
            }
            let twin = r.classes[c].twin;
            r.remove(w);
            r.push_back(twin, w);
        }
    }
    VertexOrdering::new(order)
}

/// True when every vertex's later neighbors form a clique.
///
/// Uses the parent test: with `p` the earliest later neighbor of `v`, the
/// remaining later neighbors of `v` must all be adjacent to `p`.
pub fn is_peo(g: &Graph, sigma: &VertexOrdering) -> Result<bool> {
    sigma.check_against(g)?;
    for v in g.vertices() {
        let later = sigma.later_neighbors(g, v);
        if let Some((&parent, rest)) = later.split_first() {
            if !rest.iter().all(|&u| g.has_edge(parent, u)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Recognizes chordal graphs via reversed LexBFS from vertex 0. Returns the
/// perfect elimination ordering when one exists.
pub fn is_chordal(g: &Graph) -> Result<(bool, Option<VertexOrdering>)> {
    let sigma = lexbfs(g, 0)?.reversed();
    if is_peo(g, &sigma)? {
        Ok((true, Some(sigma)))
    } else {
        Ok((false, None))
    }
}

/// Evidence that a graph is not chordal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonChordalCertificate {
    /// Vertices of an induced cycle of length at least four, in cycle order.
    InducedCycle(Vec<Vertex>),
    /// The reversed LexBFS ordering that failed the elimination check.
    FailedPeo(Vec<Vertex>),
}

impl fmt::Display for NonChordalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (label, vs) = match self {
            Self::InducedCycle(vs) => ("induced cycle", vs),
            Self::FailedPeo(vs) => ("ordering is not a perfect elimination ordering", vs),
        };
        write!(f, "{label}")?;
        for v in vs {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Largest graph for which [`certify_non_chordal`] searches for an induced cycle.
pub const CYCLE_SEARCH_LIMIT: usize = 12;

/// Certificate for a non-chordal graph: an explicit induced cycle when
/// `n <= CYCLE_SEARCH_LIMIT`, otherwise the failed elimination ordering.
/// Returns `None` for chordal graphs.
pub fn certify_non_chordal(g: &Graph) -> Result<Option<NonChordalCertificate>> {
    if is_chordal(g)?.0 {
        return Ok(None);
    }
    if g.n() <= CYCLE_SEARCH_LIMIT {
        if let Some(cycle) = find_induced_cycle(g) {
            return Ok(Some(NonChordalCertificate::InducedCycle(cycle)));
        }
    }
    let sigma = lexbfs(g, 0)?.reversed();
    Ok(Some(NonChordalCertificate::FailedPeo(sigma.as_slice().to_vec())))
}

/// Exhaustive search for an induced cycle of length >= 4 whose smallest vertex
/// is its first element. Exponential; meant for small graphs.
pub fn find_induced_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    fn extend(g: &Graph, path: &mut Vec<Vertex>, on_path: &mut [bool]) -> bool {
        let s = path[0];
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w <= s || on_path[w] {
                continue;
            }
            // w may touch only `last`, and `s` when closing the cycle.
            let interior = if path.len() > 2 { &path[1..path.len() - 1] } else { &[] };
            if interior.iter().any(|&x| g.has_edge(x, w)) {
                continue;
            }
            let closes = path.len() >= 2 && g.has_edge(s, w);
            if closes {
                if path.len() >= 3 {
                    path.push(w);
                    return true;
                }
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if extend(g, path, on_path) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }

    let mut on_path = vec![false; g.n()];
    for s in g.vertices() {
        let mut path = vec![s];
        on_path[s] = true;
        if extend(g, &mut path, &mut on_path) {
            return Some(path);
        }
        on_path[s] = false;
    }
    None
}
