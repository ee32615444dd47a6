//! Biclique partitions of co-chordal graphs.
//!
//! Both heuristics work on the chordal complement `G^c` and return a
//! partition of `G` with exactly `mc(G^c) - 1` parts:
//!
//! * [`partition_via_clique_tree`] cuts a clique tree of `G^c` edge by edge.
//!   Cutting edge `e` into subtrees `T1`, `T2` emits
//!   `{⋃T1 \ mid(e), ⋃T2 \ mid(e)}` and recurses into both subtrees.
//! * [`partition_via_lexbfs`] sweeps a perfect elimination ordering of `G^c`.
//!   For the first unprocessed vertex `v` it emits `{L, R}` where `L` is the
//!   set of unprocessed non-neighbors of `v` and `R` is `v` together with
//!   its neighbors that see nothing in `L`; then `R` is discarded.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cliques::{build_clique_tree, maximal_cliques_chordal, CliqueTree};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::ordering::{certify_non_chordal, is_chordal, VertexOrdering};
use crate::partition::{Biclique, BicliquePartition};

/// How the clique-tree heuristic picks the edge to cut.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EdgeChoiceStrategy {
    /// The lowest-indexed edge of the current subtree.
    #[default]
    FirstCanonical,
    /// A uniformly random edge of the current subtree, drawn from a
    /// ChaCha8 stream seeded with `seed` and consumed in preorder.
    Random { seed: u64 },
}

impl fmt::Display for EdgeChoiceStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FirstCanonical => write!(f, "first"),
            Self::Random { seed } => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for EdgeChoiceStrategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "first" {
            return Ok(Self::FirstCanonical);
        }
        match s.strip_prefix("random:").map(str::parse::<u64>) {
            Some(Ok(seed)) => Ok(Self::Random { seed }),
            _ => Err(format!("unknown strategy {s:?}; expected `first` or `random:<seed>`")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    CliqueTree,
    #[default]
    Lexbfs,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::CliqueTree => "clique-tree",
            Self::Lexbfs => "lexbfs",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "clique-tree" => Ok(Self::CliqueTree),
            "lexbfs" => Ok(Self::Lexbfs),
            _ => Err(format!("unknown method {s:?}; expected `clique-tree` or `lexbfs`")),
        }
    }
}

/// One emitted biclique together with the vertex set of the residual graph
/// it was cut from. The biclique is a partitioned biclique of `G(residual)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitStep {
    pub part: Biclique,
    pub residual: VertexSet,
}

enum Chooser {
    First,
    Random(Box<ChaCha8Rng>),
}

impl Chooser {
    fn new(strategy: EdgeChoiceStrategy) -> Self {
        match strategy {
            EdgeChoiceStrategy::FirstCanonical => Self::First,
            EdgeChoiceStrategy::Random { seed } => Self::Random(Box::new(ChaCha8Rng::seed_from_u64(seed))),
        }
    }

    /// Picks one of the (sorted, nonempty) edge indices.
    fn pick(&mut self, edges: &[usize]) -> usize {
        match self {
            Self::First => edges[0],
            Self::Random(rng) => edges[rng.random_range(0..edges.len())],
        }
    }
}

struct TreeSplitter<'a> {
    tree: &'a CliqueTree,
    /// Per node: (edge index, neighbor node).
    incident: Vec<Vec<(usize, usize)>>,
    chooser: Chooser,
    steps: Vec<SplitStep>,
}

impl TreeSplitter<'_> {
    fn union_of(&self, nodes: &[usize]) -> VertexSet {
        let mut all: Vec<Vertex> = nodes.iter().flat_map(|&k| self.tree.nodes[k].iter()).collect();
        all.sort_unstable();
        all.dedup();
        VertexSet::from_sorted_unchecked(all)
    }

    /// Splits the subtree spanned by `edges` (sorted, nonempty).
    fn split(&mut self, edges: Vec<usize>) -> Result<()> {
        let tree = self.tree;
        let cut = self.chooser.pick(&edges);
        let e = &tree.edges[cut];

        // Nodes reachable from `e.a` without crossing the cut.
        let mut active = vec![false; self.tree.edges.len()];
        for &i in &edges {
            active[i] = i != cut;
        }
        let mut side_one = vec![e.a];
        let mut seen = vec![false; self.tree.nodes.len()];
        seen[e.a] = true;
        let mut head = 0;
        while head < side_one.len() {
            let x = side_one[head];
            head += 1;
            for &(i, y) in &self.incident[x] {
                if active[i] && !seen[y] {
                    seen[y] = true;
                    side_one.push(y);
                }
            }
        }
        let (edges_one, edges_two): (Vec<usize>, Vec<usize>) =
            edges.iter().copied().filter(|&i| i != cut).partition(|&i| seen[self.tree.edges[i].a]);
        let mut side_two: Vec<usize> =
            edges_two.iter().flat_map(|&i| [self.tree.edges[i].a, self.tree.edges[i].b]).collect();
        side_two.push(e.b);
        side_two.sort_unstable();
        side_two.dedup();

        let one = self.union_of(&side_one);
        let two = self.union_of(&side_two);
        let left = one.difference(&e.mid);
        let right = two.difference(&e.mid);
        if left.is_empty() || right.is_empty() {
            return Err(Error::MalformedCliqueTree(format!("cutting edge {cut} leaves an empty side")));
        }
        self.steps.push(SplitStep { part: Biclique::new(left, right), residual: one.union(&two) });
        if !edges_one.is_empty() {
            self.split(edges_one)?;
        }
        if !edges_two.is_empty() {
            self.split(edges_two)?;
        }
        Ok(())
    }
}

/// Every cut made by the clique-tree heuristic, in emission (preorder) order.
pub fn clique_tree_splits(t: &CliqueTree, strategy: EdgeChoiceStrategy) -> Result<Vec<SplitStep>> {
    if let Some(defect) = t.structural_defect() {
        return Err(Error::MalformedCliqueTree(defect));
    }
    let mut incident = vec![Vec::new(); t.nodes.len()];
    for (i, e) in t.edges.iter().enumerate() {
        incident[e.a].push((i, e.b));
        incident[e.b].push((i, e.a));
    }
    let mut splitter =
        TreeSplitter { tree: t, incident, chooser: Chooser::new(strategy), steps: Vec::with_capacity(t.edges.len()) };
    if !t.edges.is_empty() {
        splitter.split((0..t.edges.len()).collect())?;
    }
    Ok(splitter.steps)
}

/// Biclique partition of the complement of the chordal graph whose clique
/// tree is `t`, with `|nodes(t)| - 1` parts.
pub fn partition_via_clique_tree(t: &CliqueTree, strategy: EdgeChoiceStrategy) -> Result<BicliquePartition> {
    let steps = clique_tree_splits(t, strategy)?;
    BicliquePartition::new(steps.into_iter().map(|s| s.part).collect())
}

/// Complement of `g` with its perfect elimination ordering, or the
/// non-co-chordality certificate.
fn chordal_complement(g: &Graph) -> Result<(Graph, VertexOrdering)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let gc = g.complement();
    match is_chordal(&gc)? {
        (true, Some(sigma)) => Ok((gc, sigma)),
        _ => {
            let cert = certify_non_chordal(&gc)?.expect("complement was rejected as non-chordal");
            Err(Error::NotCoChordal(cert))
        }
    }
}

/// The elimination sweep over a chordal `gc` with perfect elimination
/// ordering `sigma`. Residuals are the unprocessed sets at each emission.
fn sweep(gc: &Graph, sigma: &VertexOrdering) -> Vec<SplitStep> {
    let n = gc.n();
    let mut pending: Vec<Vertex> = sigma.as_slice().to_vec();
    let mut alive = vec![true; n];
    // Iteration stamps; 0 means unmarked.
    let mut near = vec![0usize; n];
    let mut in_left = vec![0usize; n];
    let mut steps = Vec::new();

    let mut round = 0;
    while let Some(&v) = pending.first() {
        round += 1;
        let neighbors: Vec<Vertex> = gc.neighbors(v).iter().copied().filter(|&u| alive[u]).collect();
        for &u in &neighbors {
            near[u] = round;
        }
        let mut left = Vec::new();
        for &u in &pending[1..] {
            if near[u] != round {
                in_left[u] = round;
                left.push(u);
            }
        }
        let mut right = vec![v];
        right.extend(neighbors.iter().copied().filter(|&u| gc.neighbors(u).iter().all(|&w| in_left[w] != round)));
        if !left.is_empty() {
            steps.push(SplitStep {
                part: Biclique::new(VertexSet::from_unsorted(left), VertexSet::from_unsorted(right.clone())),
                residual: VertexSet::from_unsorted(pending.clone()),
            });
        }
        for &u in &right {
            alive[u] = false;
        }
        pending.retain(|&u| alive[u]);
    }
    steps
}

/// Every biclique emitted by the elimination sweep, with residuals.
pub fn lexbfs_splits(g: &Graph) -> Result<Vec<SplitStep>> {
    let (gc, sigma) = chordal_complement(g)?;
    Ok(sweep(&gc, &sigma))
}

/// Biclique partition of a co-chordal graph from a perfect elimination
/// ordering of its complement. Runs in O(n (n + m^c)).
pub fn partition_via_lexbfs(g: &Graph) -> Result<BicliquePartition> {
    let steps = lexbfs_splits(g)?;
    BicliquePartition::new(steps.into_iter().map(|s| s.part).collect())
}

/// Checks co-chordality, runs the chosen heuristic and reports
/// `mc(G^c)` alongside the partition.
pub fn partition_auto(g: &Graph, method: Method, strategy: EdgeChoiceStrategy) -> Result<(BicliquePartition, usize)> {
    let (gc, sigma) = chordal_complement(g)?;
    let mc = maximal_cliques_chordal(&gc, &sigma)?.len();
    let partition = match method {
        Method::CliqueTree => partition_via_clique_tree(&build_clique_tree(&gc)?, strategy)?,
        Method::Lexbfs => BicliquePartition::new(sweep(&gc, &sigma).into_iter().map(|s| s.part).collect())?,
    };
    debug_assert_eq!(partition.len() + 1, mc);
    debug_assert!(crate::partition::verify_partition(g, partition.parts()).is_pass());
    Ok((partition, mc))
}
