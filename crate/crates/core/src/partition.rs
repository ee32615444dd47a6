//! Bicliques, biclique partitions and their verification.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Undirected edge with `u < v`.
pub type Edge = (Vertex, Vertex);

fn edge(a: Vertex, b: Vertex) -> Edge {
    (a.min(b), a.max(b))
}

/// Complete bipartite subgraph `{L, R}` with edge set `L × R`.
///
/// Sides are unordered; the constructor puts the side holding the smallest
/// vertex on the left so equal bicliques compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Biclique {
    left: VertexSet,
    right: VertexSet,
}

impl Biclique {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        let key = |s: &VertexSet| s.first().unwrap_or(Vertex::MAX);
        if key(&b) < key(&a) {
            Self { left: b, right: a }
        } else {
            Self { left: a, right: b }
        }
    }

    pub fn left(&self) -> &VertexSet {
        &self.left
    }

    pub fn right(&self) -> &VertexSet {
        &self.right
    }

    pub fn has_empty_side(&self) -> bool {
        self.left.is_empty() || self.right.is_empty()
    }

    /// Number of edges, `|L|·|R|`.
    pub fn size(&self) -> usize {
        self.left.len() * self.right.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.left.iter().flat_map(move |u| self.right.iter().map(move |v| edge(u, v)))
    }

    /// `{L ∩ s, R ∩ s}`; either side may end up empty.
    pub fn restrict(&self, s: &VertexSet) -> Biclique {
        Biclique::new(self.left.intersection(s), self.right.intersection(s))
    }

    fn check(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.left)?;
        g.check_set(&self.right)
    }
}

impl fmt::Display for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}×{}", self.left, self.right)
    }
}

/// Ordered collection of bicliques, each with two nonempty sides.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BicliquePartition {
    parts: Vec<Biclique>,
}

impl BicliquePartition {
    pub fn new(parts: Vec<Biclique>) -> Result<Self> {
        if let Some(part) = parts.iter().position(Biclique::has_empty_side) {
            return Err(Error::EmptySide { part });
        }
        Ok(Self { parts })
    }

    pub fn push(&mut self, b: Biclique) -> Result<()> {
        if b.has_empty_side() {
            return Err(Error::EmptySide { part: self.parts.len() });
        }
        self.parts.push(b);
        Ok(())
    }

    pub fn parts(&self) -> &[Biclique] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of edges over all parts.
    pub fn edge_count(&self) -> usize {
        self.parts.iter().map(Biclique::size).sum()
    }

    pub fn into_parts(self) -> Vec<Biclique> {
        self.parts
    }
}

impl From<BicliquePartition> for Vec<Biclique> {
    fn from(p: BicliquePartition) -> Self {
        p.parts
    }
}

pub fn is_biclique_subgraph(g: &Graph, b: &Biclique) -> Result<bool> {
    b.check(g)?;
    Ok(b.left.is_disjoint(&b.right) && b.edges().all(|(u, v)| g.has_edge(u, v)))
}

/// A biclique whose leftover vertices `V \ (L ∪ R)` are independent, which
/// makes its edges, those of `G(V \ L)` and those of `G(V \ R)` disjoint.
pub fn is_partitioned_biclique(g: &Graph, b: &Biclique) -> Result<bool> {
    if !is_biclique_subgraph(g, b)? {
        return Ok(false);
    }
    let rest = VertexSet::range(g.n()).difference(&b.left.union(&b.right));
    g.is_independent_set(&rest)
}

/// First reason a partition fails verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptySide { part: usize },
    VertexOutOfRange { part: usize, vertex: Vertex },
    SidesOverlap { part: usize, vertex: Vertex },
    NotAnEdge { part: usize, edge: Edge },
    DuplicateEdge { edge: Edge, first: usize, second: usize },
    UncoveredEdge { edge: Edge },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptySide { part } => write!(f, "part {part} has an empty side"),
            Self::VertexOutOfRange { part, vertex } => {
                write!(f, "part {part} uses vertex {vertex} outside the graph")
            }
            Self::SidesOverlap { part, vertex } => {
                write!(f, "part {part} has vertex {vertex} on both sides")
            }
            Self::NotAnEdge { part, edge: (u, v) } => {
                write!(f, "part {part} contains non-edge {u} {v}")
            }
            Self::DuplicateEdge { edge: (u, v), .. } => write!(f, "duplicate edge {u} {v}"),
            Self::UncoveredEdge { edge: (u, v) } => write!(f, "uncovered edge {u} {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Checks that every part is a biclique subgraph of `g`, that parts are
/// edge-disjoint and that together they cover every edge of `g`.
pub fn verify_partition(g: &Graph, parts: &[Biclique]) -> Verdict {
    for (part, b) in parts.iter().enumerate() {
        if b.has_empty_side() {
            return Verdict::Fail(Violation::EmptySide { part });
        }
        if let Some(vertex) = b.left.iter().chain(b.right.iter()).find(|&v| v >= g.n()) {
            return Verdict::Fail(Violation::VertexOutOfRange { part, vertex });
        }
        if let Some(vertex) = b.left.intersection(&b.right).first() {
            return Verdict::Fail(Violation::SidesOverlap { part, vertex });
        }
        if let Some(edge) = b.edges().find(|&(u, v)| !g.has_edge(u, v)) {
            return Verdict::Fail(Violation::NotAnEdge { part, edge });
        }
    }
    let mut owner: HashMap<Edge, usize> = HashMap::with_capacity(g.m());
    for (part, b) in parts.iter().enumerate() {
        let mut edges: Vec<Edge> = b.edges().collect();
        edges.sort_unstable();
        for e in edges {
            if let Some(&first) = owner.get(&e) {
                return Verdict::Fail(Violation::DuplicateEdge { edge: e, first, second: part });
            }
            owner.insert(e, part);
        }
    }
    match g.edges().find(|e| !owner.contains_key(e)) {
        Some(edge) => Verdict::Fail(Violation::UncoveredEdge { edge }),
        None => Verdict::Pass,
    }
}

/// The three edge sets of a biclique split: the biclique's own edges and the
/// edges of `G(V \ L)` and `G(V \ R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDecomposition {
    pub cross: Vec<Edge>,
    pub without_left: Vec<Edge>,
    pub without_right: Vec<Edge>,
}

impl EdgeDecomposition {
    /// Whether the three sets are pairwise disjoint.
    pub fn is_disjoint(&self) -> bool {
        let mut all: Vec<Edge> =
            self.cross.iter().chain(&self.without_left).chain(&self.without_right).copied().collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        all.len() == total
    }

    /// Sorted union of the three sets.
    pub fn union(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> =
            self.cross.iter().chain(&self.without_left).chain(&self.without_right).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

pub fn decomposition_edges(g: &Graph, b: &Biclique) -> Result<EdgeDecomposition> {
    if !is_biclique_subgraph(g, b)? {
        return Err(Error::NotABiclique);
    }
    let mut cross: Vec<Edge> = b.edges().collect();
    cross.sort_unstable();
    let avoiding = |side: &VertexSet| -> Vec<Edge> {
        g.edges().filter(|&(u, v)| !side.contains(u) && !side.contains(v)).collect()
    };
    Ok(EdgeDecomposition { cross, without_left: avoiding(&b.left), without_right: avoiding(&b.right) })
}
