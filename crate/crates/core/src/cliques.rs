//! Maximal cliques of chordal graphs, clique trees, clique-vertex
//! irreducibility, split recognition and maximum independent sets.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::ordering::{is_chordal, is_peo, VertexOrdering};

/// Edge of a clique tree between nodes `a` and `b`; `mid` is the
/// intersection of the two cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTreeEdge {
    pub a: usize,
    pub b: usize,
    pub mid: VertexSet,
}

/// Tree on the maximal cliques of a chordal graph with the
/// clique-intersection property.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliqueTree {
    pub nodes: Vec<VertexSet>,
    pub edges: Vec<CliqueTreeEdge>,
}

impl CliqueTree {
    /// Builds a tree from node cliques and `(a, b)` pairs, filling in the
    /// middle sets.
    pub fn from_pairs(nodes: Vec<VertexSet>, pairs: &[(usize, usize)]) -> Self {
        let edges = pairs
            .iter()
            .map(|&(a, b)| {
                let mid = match (nodes.get(a), nodes.get(b)) {
                    (Some(x), Some(y)) => x.intersection(y),
                    _ => VertexSet::new(),
                };
                CliqueTreeEdge { a, b, mid }
            })
            .collect();
        Self { nodes, edges }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Checks everything that does not depend on the underlying graph: tree
    /// shape, middle sets and the clique-intersection property. Returns a
    /// description of the first defect found.
    pub fn structural_defect(&self) -> Option<String> {
        let k = self.nodes.len();
        if k == 0 {
            return (!self.edges.is_empty()).then(|| "edges without nodes".to_string());
        }
        if self.edges.len() != k - 1 {
            return Some(format!("{} edges for {} nodes", self.edges.len(), k));
        }
        let mut dsu = DisjointSets::new(k);
        for (i, e) in self.edges.iter().enumerate() {
            if e.a >= k || e.b >= k {
                return Some(format!("edge {i} references a missing node"));
            }
            if e.mid != self.nodes[e.a].intersection(&self.nodes[e.b]) {
                return Some(format!("edge {i} has a wrong middle set"));
            }
            if !dsu.union(e.a, e.b) {
                return Some(format!("edge {i} closes a cycle"));
            }
        }
        // In a tree the nodes holding v induce a subtree iff the edges whose
        // middle set holds v number one less than those nodes.
        let span = self.nodes.iter().flat_map(|c| c.as_slice().last().copied()).max().map_or(0, |v| v + 1);
        let mut node_count = vec![0usize; span];
        let mut edge_count = vec![0usize; span];
        for c in &self.nodes {
            for v in c.iter() {
                node_count[v] += 1;
            }
        }
        for e in &self.edges {
            for v in e.mid.iter() {
                edge_count[v] += 1;
            }
        }
        (0..span)
            .find(|&v| node_count[v] > 0 && edge_count[v] + 1 != node_count[v])
            .map(|v| format!("nodes containing vertex {v} are not connected"))
    }
}

/// Maximal cliques of `g` from a perfect elimination ordering.
///
/// Each maximal clique is `{v} ∪ later(v)` for its first vertex `v`. The
/// candidate of `v` is dropped when some `u` whose earliest later neighbor is
/// `v` has exactly one more later neighbor than `v`. Cliques come out in
/// ordering order of their first vertex.
pub fn maximal_cliques_chordal(g: &Graph, sigma: &VertexOrdering) -> Result<Vec<VertexSet>> {
    if !is_peo(g, sigma)? {
        return Err(Error::NotPeo);
    }
    let n = g.n();
    let later: Vec<Vec<Vertex>> = g.vertices().map(|v| sigma.later_neighbors(g, v)).collect();
    let mut contained = vec![false; n];
    for u in g.vertices() {
        if let Some(&p) = later[u].first() {
            if later[u].len() == later[p].len() + 1 {
                contained[p] = true;
            }
        }
    }
    Ok(sigma
        .iter()
        .filter(|&v| !contained[v])
        .map(|v| {
            let mut c = later[v].clone();
            c.push(v);
            VertexSet::from_unsorted(c)
        })
        .collect())
}

fn chordal_peo(g: &Graph) -> Result<VertexOrdering> {
    match is_chordal(g)? {
        (true, Some(sigma)) => Ok(sigma),
        _ => Err(Error::NotChordal),
    }
}

/// Maximal cliques of a chordal graph.
pub fn chordal_maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_cliques_chordal(g, &chordal_peo(g)?)
}

/// Number of maximal cliques of a chordal graph.
pub fn mc(g: &Graph) -> Result<usize> {
    Ok(chordal_maximal_cliques(g)?.len())
}

/// Clique tree of a chordal graph as a maximum-weight spanning tree of the
/// clique intersection graph (weight `|Ki ∩ Kj|`). Nodes are sorted; Kruskal
/// runs over pairs sorted by descending weight, ties broken by `(i, j)`.
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree> {
    let mut nodes = chordal_maximal_cliques(g)?;
    nodes.sort();
    let k = nodes.len();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((nodes[i].intersection(&nodes[j]).len(), i, j));
        }
    }
    pairs.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));

    let mut dsu = DisjointSets::new(k);
    let mut chosen = Vec::with_capacity(k.saturating_sub(1));
    for (_, i, j) in pairs {
        if dsu.union(i, j) {
            chosen.push((i, j));
            if chosen.len() + 1 == k {
                break;
            }
        }
    }
    Ok(CliqueTree::from_pairs(nodes, &chosen))
}

/// Describes why `t` is not a clique tree of `g`, or `None` when it is.
pub fn clique_tree_defect(g: &Graph, t: &CliqueTree) -> Option<String> {
    for (i, c) in t.nodes.iter().enumerate() {
        if g.check_set(c).is_err() {
            return Some(format!("node {i} references a vertex outside the graph"));
        }
    }
    let mut expected = match chordal_maximal_cliques(g) {
        Ok(cs) => cs,
        Err(e) => return Some(e.to_string()),
    };
    let mut actual = t.nodes.clone();
    expected.sort();
    actual.sort();
    if expected != actual {
        return Some("nodes are not the maximal cliques of the graph".to_string());
    }
    t.structural_defect()
}

pub fn verify_clique_tree(g: &Graph, t: &CliqueTree) -> bool {
    clique_tree_defect(g, t).is_none()
}

/// Whether every maximal clique of the chordal graph `g` owns a vertex that
/// lies in no other maximal clique.
pub fn is_clique_vertex_irreducible(g: &Graph) -> Result<bool> {
    let cliques = chordal_maximal_cliques(g)?;
    let mut count = vec![0usize; g.n()];
    for c in &cliques {
        for v in c.iter() {
            count[v] += 1;
        }
    }
    Ok(cliques.iter().all(|c| c.iter().any(|v| count[v] == 1)))
}

/// Split graph recognition by the degree-sequence test. The witness is the
/// `(clique side, independent side)` pair, checked before it is returned.
/// When the independent side is nonempty it is made maximal.
pub fn is_split(g: &Graph) -> (bool, Option<(VertexSet, VertexSet)>) {
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    // Largest k (1-based) with d_k >= k - 1.
    let k = degrees.iter().enumerate().take_while(|&(i, &d)| d >= i).count();
    let head: usize = degrees[..k].iter().sum();
    let tail: usize = degrees[k..].iter().sum();
    if head != k * k.saturating_sub(1) + tail {
        return (false, None);
    }
    let mut clique = VertexSet::from_unsorted(by_degree[..k].to_vec());
    let mut independent = VertexSet::from_unsorted(by_degree[k..].to_vec());
    if !independent.is_empty() {
        // At most one clique vertex can miss the independent side entirely.
        let loner = clique.iter().find(|&v| g.neighbors(v).iter().all(|&u| !independent.contains(u)));
        if let Some(v) = loner {
            clique = clique.difference(&VertexSet::singleton(v));
            independent = independent.union(&VertexSet::singleton(v));
        }
    }
    let ok = g.is_clique(&clique).unwrap_or(false) && g.is_independent_set(&independent).unwrap_or(false);
    if ok {
        (true, Some((clique, independent)))
    } else {
        (false, None)
    }
}

/// Maximum independent set of a chordal graph: greedy scan of a perfect
/// elimination ordering.
pub fn max_independent_set_chordal(g: &Graph, sigma: &VertexOrdering) -> Result<VertexSet> {
    if !is_peo(g, sigma)? {
        return Err(Error::NotPeo);
    }
    let mut blocked = vec![false; g.n()];
    let mut taken = Vec::new();
    for v in sigma.iter() {
        if !blocked[v] {
            taken.push(v);
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    Ok(VertexSet::from_unsorted(taken))
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{arb_graph, c4, g, p4};
    use proptest::prelude::*;

    fn vs<const N: usize>(ids: [usize; N]) -> VertexSet {
        VertexSet::from(ids)
    }

    fn p3() -> Graph {
        g(3, &[(0, 1), (1, 2)])
    }

    #[test]
    fn maximal_cliques_examples() {
        let sigma = VertexOrdering::new(vec![0, 2, 1]).unwrap();
        assert_eq!(maximal_cliques_chordal(&p3(), &sigma).unwrap(), vec![vs([0, 1]), vs([1, 2])]);

        let k4 = Graph::complete(4);
        let sigma = VertexOrdering::new(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(maximal_cliques_chordal(&k4, &sigma).unwrap(), vec![vs([0, 1, 2, 3])]);

        let e3 = Graph::empty(3);
        let sigma = VertexOrdering::identity(3);
        assert_eq!(maximal_cliques_chordal(&e3, &sigma).unwrap(), vec![vs([0]), vs([1]), vs([2])]);

        let bad = VertexOrdering::new(vec![1, 0, 2]).unwrap();
        assert_eq!(maximal_cliques_chordal(&p3(), &bad), Err(Error::NotPeo));
    }

    #[test]
    fn mc_examples() {
        assert_eq!(mc(&p4()).unwrap(), 3);
        assert_eq!(mc(&Graph::complete(6)).unwrap(), 1);
        assert_eq!(mc(&g(4, &[(0, 1), (2, 3)])).unwrap(), 2);
        assert_eq!(mc(&c4()), Err(Error::NotChordal));
    }

    #[test]
    fn build_clique_tree_examples() {
        let t = build_clique_tree(&p3()).unwrap();
        assert_eq!(t.nodes, vec![vs([0, 1]), vs([1, 2])]);
        assert_eq!(t.edges, vec![CliqueTreeEdge { a: 0, b: 1, mid: vs([1]) }]);

        let t = build_clique_tree(&Graph::complete(4)).unwrap();
        assert_eq!(t.nodes, vec![vs([0, 1, 2, 3])]);
        assert!(t.edges.is_empty());

        let e3 = Graph::empty(3);
        let t = build_clique_tree(&e3).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.edges.len(), 2);
        assert!(t.edges.iter().all(|e| e.mid.is_empty()));
        assert!(verify_clique_tree(&e3, &t));

        assert_eq!(build_clique_tree(&c4()), Err(Error::NotChordal));
    }

    #[test]
    fn verify_clique_tree_examples() {
        let t = build_clique_tree(&p3()).unwrap();
        assert!(verify_clique_tree(&p3(), &t));

        // {0,1} - {2,3} - {1,2}: vertex 1 splits across non-adjacent nodes.
        let nodes = vec![vs([0, 1]), vs([1, 2]), vs([2, 3])];
        let bad = CliqueTree::from_pairs(nodes.clone(), &[(0, 2), (2, 1)]);
        assert!(!verify_clique_tree(&p4(), &bad));
        assert!(clique_tree_defect(&p4(), &bad).unwrap().contains("vertex 1"));
        let good = CliqueTree::from_pairs(nodes, &[(0, 1), (1, 2)]);
        assert!(verify_clique_tree(&p4(), &good));

        let k3 = Graph::complete(3);
        assert!(verify_clique_tree(&k3, &CliqueTree::from_pairs(vec![vs([0, 1, 2])], &[])));
    }

    #[test]
    fn verify_clique_tree_rejects_malformed_input() {
        let nodes = vec![vs([0, 1]), vs([1, 2]), vs([2, 3])];
        let cyclic = CliqueTree::from_pairs(nodes.clone(), &[(0, 1), (1, 0)]);
        assert!(!verify_clique_tree(&p4(), &cyclic));
        let short = CliqueTree::from_pairs(nodes.clone(), &[(0, 1)]);
        assert!(!verify_clique_tree(&p4(), &short));
        let dangling = CliqueTree::from_pairs(nodes.clone(), &[(0, 1), (1, 7)]);
        assert!(!verify_clique_tree(&p4(), &dangling));
        let mut wrong_mid = CliqueTree::from_pairs(nodes, &[(0, 1), (1, 2)]);
        wrong_mid.edges[0].mid = VertexSet::new();
        assert!(!verify_clique_tree(&p4(), &wrong_mid));
        let not_cliques = CliqueTree::from_pairs(vec![vs([0, 1, 2])], &[]);
        assert!(!verify_clique_tree(&p4(), &not_cliques));
        let out_of_range = CliqueTree::from_pairs(vec![vs([0, 9])], &[]);
        assert!(!verify_clique_tree(&p4(), &out_of_range));
        assert!(!verify_clique_tree(&c4(), &CliqueTree::default()));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_clique_vertex_irreducible(&p3()).unwrap());
        assert!(is_clique_vertex_irreducible(&Graph::complete(4)).unwrap());
        let two_triangles = g(4, &[(0, 1), (1, 3), (0, 3), (0, 2), (2, 3)]);
        assert!(is_clique_vertex_irreducible(&two_triangles).unwrap());
        // Cliques {0,1,2}, {1,2,3}, {2,3,4}: the middle one has no private vertex.
        let strip = g(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        assert!(!is_clique_vertex_irreducible(&strip).unwrap());
        assert_eq!(is_clique_vertex_irreducible(&c4()), Err(Error::NotChordal));
    }

    #[test]
    fn split_examples() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(is_split(&star), (true, Some((vs([0]), vs([1, 2, 3])))));
        assert_eq!(is_split(&c4()), (false, None));
        assert_eq!(is_split(&Graph::complete(4)), (true, Some((vs([0, 1, 2, 3]), VertexSet::new()))));
        assert_eq!(is_split(&Graph::empty(0)), (true, Some((VertexSet::new(), VertexSet::new()))));
    }

    #[test]
    fn independent_set_examples() {
        let sigma = VertexOrdering::new(vec![0, 2, 1]).unwrap();
        assert_eq!(max_independent_set_chordal(&p3(), &sigma).unwrap(), vs([0, 2]));
        let k5 = Graph::complete(5);
        assert_eq!(max_independent_set_chordal(&k5, &VertexOrdering::identity(5)).unwrap().len(), 1);
        let two_k2 = g(4, &[(0, 1), (2, 3)]);
        let s = max_independent_set_chordal(&two_k2, &VertexOrdering::identity(4)).unwrap();
        assert_eq!(s.len(), 2);
        assert!(two_k2.is_independent_set(&s).unwrap());
    }

    /// Brute force over all vertex subsets (n <= 10).
    fn brute_maximal_cliques(h: &Graph) -> Vec<VertexSet> {
        let n = h.n();
        let sets: Vec<VertexSet> = (1u32..1 << n)
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<VertexSet>())
            .filter(|s| h.is_clique(s).unwrap())
            .collect();
        let mut out: Vec<_> =
            sets.iter().filter(|s| !sets.iter().any(|t| t.len() > s.len() && s.is_subset(t))).cloned().collect();
        out.sort();
        out
    }

    fn brute_alpha(h: &Graph) -> usize {
        let n = h.n();
        (0u32..1 << n)
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<VertexSet>())
            .filter(|s| h.is_independent_set(s).unwrap())
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    fn arb_chordal(max_n: usize) -> impl Strategy<Value = (Graph, VertexOrdering)> {
        arb_graph(max_n).prop_filter_map("chordal", |h| {
            if h.n() == 0 {
                return None;
            }
            match is_chordal(&h).unwrap() {
                (true, Some(s)) => Some((h, s)),
                _ => None,
            }
        })
    }

    #[test]
    fn peo_cliques_match_brute_force_exhaustively() {
        // Every chordal graph on up to 6 vertices.
        for n in 1..=6usize {
            let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let h = g(n, &edges);
                let (true, Some(sigma)) = is_chordal(&h).unwrap() else {
                    continue;
                };
                let mut got = maximal_cliques_chordal(&h, &sigma).unwrap();
                got.sort();
                assert_eq!(got, brute_maximal_cliques(&h), "{edges:?}");
                assert_eq!(max_independent_set_chordal(&h, &sigma).unwrap().len(), brute_alpha(&h));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn peo_cliques_match_brute_force((h, sigma) in arb_chordal(8)) {
            let mut got = maximal_cliques_chordal(&h, &sigma).unwrap();
            // Distinct maximal cliques have distinct first vertices.
            let mut leaders: Vec<_> = got
                .iter()
                .map(|c| c.iter().min_by_key(|&v| sigma.position(v)).unwrap())
                .collect();
            leaders.sort_unstable();
            leaders.dedup();
            prop_assert_eq!(leaders.len(), got.len());
            got.sort();
            prop_assert_eq!(got, brute_maximal_cliques(&h));
        }

        #[test]
        fn independent_set_is_maximum((h, sigma) in arb_chordal(8)) {
            let s = max_independent_set_chordal(&h, &sigma).unwrap();
            prop_assert!(h.is_independent_set(&s).unwrap());
            prop_assert_eq!(s.len(), brute_alpha(&h));
        }

        #[test]
        fn built_trees_verify((h, _) in arb_chordal(10)) {
            let t = build_clique_tree(&h).unwrap();
            prop_assert_eq!(clique_tree_defect(&h, &t), None);
        }

        #[test]
        fn split_verdict_matches_brute_force(h in arb_graph(8)) {
            let n = h.n();
            let brute = (0u32..1 << n).any(|mask| {
                let a: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let b: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
                h.is_clique(&a).unwrap() && h.is_independent_set(&b).unwrap()
            });
            let (ok, witness) = is_split(&h);
            prop_assert_eq!(ok, brute);
            if let Some((a, b)) = witness {
                prop_assert_eq!(a.len() + b.len(), n);
                prop_assert!(a.is_disjoint(&b));
                // Split graphs are chordal, and mc <= |independent side| + 1.
                if n > 0 {
                    prop_assert!(mc(&h).unwrap() <= b.len() + 1);
                }
            }
        }
    }
}
