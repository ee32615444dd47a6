//! Undirected simple graphs over dense vertex ids and sorted vertex sets.

use std::fmt;

use crate::error::{Error, Result};

/// Vertex identifier. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a set from arbitrary ids, sorting and dropping duplicates.
    pub fn from_unsorted(mut ids: Vec<Vertex>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Self(ids)
    }

    /// Wraps an already sorted, duplicate-free vector.
    pub(crate) fn from_sorted_unchecked(ids: Vec<Vertex>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        Self(ids)
    }

    pub fn singleton(v: Vertex) -> Self {
        Self(vec![v])
    }

    pub fn range(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Self(out)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(ids: [Vertex; N]) -> Self {
        Self::from_unsorted(ids.to_vec())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Self { adj, m: n * n.saturating_sub(1) / 2 }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range endpoints
    /// are rejected; repeated edges collapse into one.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Normalizes raw adjacency lists (sort + dedup). Lists must be symmetric
    /// and loop-free.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut degree_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        debug_assert!(degree_sum % 2 == 0);
        Self { adj, m: degree_sum / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        check_vertex(v, self.n())
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.as_slice().last() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut out = Vec::with_capacity(n - 1 - self.adj[v].len());
                let mut it = self.adj[v].iter().peekable();
                for u in 0..n {
                    if it.peek() == Some(&&u) {
                        it.next();
                    } else if u != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Subgraph induced by `s`, relabeled to `0..|s|`. The returned map sends
    /// each new id to its original id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        self.check_set(s)?;
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, v) in s.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = s
            .iter()
            .map(|v| self.adj[v].iter().filter_map(|&u| (new_id[u] != usize::MAX).then_some(new_id[u])).collect())
            .collect();
        Ok((Graph::from_adjacency(adj), s.as_slice().to_vec()))
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| self.adj[v].iter().all(|&u| !s.contains(u))))
    }

    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| s.iter().all(|u| u == v || self.has_edge(u, v))))
    }

    /// Vertices adjacent to every member of `s` and not in `s`.
    pub fn common_neighbors(&self, s: &VertexSet) -> VertexSet {
        let mut it = s.iter();
        let Some(first) = it.next() else {
            return VertexSet::range(self.n());
        };
        let mut acc = VertexSet::from_sorted_unchecked(self.adj[first].clone());
        for v in it {
            acc = acc.intersection(&VertexSet::from_sorted_unchecked(self.adj[v].clone()));
        }
        acc
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}
