//! Exact biclique partition numbers for small graphs and the bound report
//! that brackets `bp(G)` from the co-chordal theory.

use std::collections::HashMap;
use std::fmt;

use crate::cliques::{is_clique_vertex_irreducible, is_split, max_independent_set_chordal, maximal_cliques_chordal};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::heuristics::partition_via_lexbfs;
use crate::ordering::is_chordal;
use crate::partition::{Biclique, BicliquePartition};

/// Default edge cap for [`exact_bp`].
pub const DEFAULT_EDGE_CAP: usize = 18;
/// Hard limit imposed by the 64-bit edge masks of the search.
pub const MAX_ORACLE_EDGES: usize = 64;
/// Default number of search-node expansions before giving up.
pub const DEFAULT_BUDGET: u64 = 20_000_000;
/// Largest graph whose clique number is found by subset enumeration when the
/// complement is not chordal.
pub const BRUTE_OMEGA_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub edge_cap: usize,
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { edge_cap: DEFAULT_EDGE_CAP, budget: DEFAULT_BUDGET }
    }
}

/// Outcome of the exact search. When `complete` is false the budget ran out:
/// `bp` is then only the size of the best partition found and `lower_bound`
/// the best proven lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub bp: usize,
    pub partition: BicliquePartition,
    pub complete: bool,
    pub lower_bound: usize,
    pub expansions: u64,
}

type VMask = u128;
type EMask = u64;

fn bits(mut m: VMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

fn edge_bits(mut m: EMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

/// Iterates every subset of `m`.
fn subsets(m: VMask) -> impl Iterator<Item = VMask> {
    let members: Vec<usize> = bits(m).collect();
    let k = members.len();
    (0u64..1 << k).map(move |code| {
        members.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).fold(0, |acc, (_, &v)| acc | 1 << v)
    })
}

struct Search {
    /// Endpoints of each edge in compact vertex ids.
    ends: Vec<(usize, usize)>,
    /// Edges incident to each compact vertex.
    incident: Vec<EMask>,
    /// Largest budget `k` proven insufficient for an uncovered edge set.
    refuted: HashMap<EMask, usize>,
    /// Chosen bicliques on the current search path, as (left, right) masks.
    chosen: Vec<(VMask, VMask)>,
    expansions: u64,
    budget: u64,
}

struct OutOfBudget;

impl Search {
    fn neighbors(&self, x: usize, h: EMask) -> VMask {
        edge_bits(self.incident[x] & h).fold(0, |acc, e| {
            let (a, b) = self.ends[e];
            acc | 1 << (a + b - x)
        })
    }

    /// Clique number of the graph formed by the edges in `h` (at least 1 when
    /// `h` is nonempty, 0 otherwise).
    fn clique_number(&self, h: EMask) -> usize {
        if h == 0 {
            return 0;
        }
        let mut verts: VMask = 0;
        for e in edge_bits(h) {
            let (a, b) = self.ends[e];
            verts |= 1 << a | 1 << b;
        }
        let nbr: Vec<VMask> = (0..self.incident.len()).map(|x| self.neighbors(x, h)).collect();
        fn grow(size: usize, cand: VMask, best: &mut usize, nbr: &[VMask]) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let mut rest = cand;
            while rest != 0 {
                if size + rest.count_ones() as usize <= *best {
                    return;
                }
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow(size + 1, rest & nbr[x], best, nbr);
            }
        }
        let mut best = 0;
        grow(0, verts, &mut best, &nbr);
        best
    }

    /// Every biclique of `h` containing edge `e`, as (left, right, edges),
    /// largest first. Left holds the lower endpoint of `e`.
    fn bicliques_through(&self, e: usize, h: EMask) -> Vec<(VMask, VMask, EMask)> {
        let (u, v) = self.ends[e];
        let nbr_v = self.neighbors(v, h);
        let mut out = Vec::new();
        for extra_left in subsets(nbr_v & !(1 << u)) {
            let left = extra_left | 1 << u;
            let common = bits(left).fold(!0, |acc, x| acc & self.neighbors(x, h));
            for extra_right in subsets(common & !(1 << v)) {
                let right = extra_right | 1 << v;
                let mut edges: EMask = 0;
                for x in bits(left) {
                    for f in edge_bits(self.incident[x] & h) {
                        let (a, b) = self.ends[f];
                        if right >> (a + b - x) & 1 == 1 {
                            edges |= 1 << f;
                        }
                    }
                }
                out.push((left, right, edges));
            }
        }
        out.sort_by_key(|c| std::cmp::Reverse(c.2.count_ones()));
        out
    }

    /// Whether the edges in `h` split into at most `k` bicliques.
    fn feasible(&mut self, h: EMask, k: usize) -> Result<bool, OutOfBudget> {
        if h == 0 {
            return Ok(true);
        }
        if k == 0 || self.refuted.get(&h).is_some_and(|&r| r >= k) {
            return Ok(false);
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(OutOfBudget);
        }
        if self.clique_number(h) - 1 > k {
            self.refute(h, k);
            return Ok(false);
        }
        let first = h.trailing_zeros() as usize;
        for (left, right, covered) in self.bicliques_through(first, h) {
            self.chosen.push((left, right));
            if self.feasible(h & !covered, k - 1)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        self.refute(h, k);
        Ok(false)
    }

    fn refute(&mut self, h: EMask, k: usize) {
        let entry = self.refuted.entry(h).or_insert(0);
        *entry = (*entry).max(k);
    }
}

/// A partition that always exists: one star per vertex towards its
/// higher-numbered neighbors, or the heuristic partition when `g` is
/// co-chordal and that is smaller.
fn fallback_partition(g: &Graph) -> BicliquePartition {
    let stars = g
        .vertices()
        .filter_map(|v| {
            let later: VertexSet = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
            (!later.is_empty()).then(|| Biclique::new(VertexSet::singleton(v), later))
        })
        .collect();
    let stars = BicliquePartition::new(stars).expect("stars have two nonempty sides");
    match partition_via_lexbfs(g) {
        Ok(p) if p.len() < stars.len() => p,
        _ => stars,
    }
}

/// Minimum biclique partition by branch and bound.
///
/// The search takes the lowest uncovered edge, tries every biclique of the
/// uncovered graph that contains it (larger ones first) and recurses. Budgets
/// are raised one at a time from the clique-number lower bound, and
/// refuted uncovered sets are memoized. Subtrees are cut when
/// `ω(uncovered) - 1` exceeds the remaining budget.
pub fn exact_bp(g: &Graph, config: &OracleConfig) -> Result<ExactResult> {
    let m = g.m();
    let cap = config.edge_cap.min(MAX_ORACLE_EDGES);
    if m > cap {
        return Err(Error::EdgeCapExceeded { m, cap });
    }
    let fallback = fallback_partition(g);
    if m == 0 {
        return Ok(ExactResult { bp: 0, partition: fallback, complete: true, lower_bound: 0, expansions: 0 });
    }

    // Compact ids for non-isolated vertices.
    let active: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let mut compact = vec![usize::MAX; g.n()];
    for (i, &v) in active.iter().enumerate() {
        compact[v] = i;
    }
    let ends: Vec<(usize, usize)> = g.edges().map(|(u, v)| (compact[u], compact[v])).collect();
    let mut incident = vec![0 as EMask; active.len()];
    for (i, &(a, b)) in ends.iter().enumerate() {
        incident[a] |= 1 << i;
        incident[b] |= 1 << i;
    }
    let mut search =
        Search { ends, incident, refuted: HashMap::new(), chosen: Vec::new(), expansions: 0, budget: config.budget };
    let all: EMask = if m == 64 { !0 } else { (1 << m) - 1 };
    let upper = fallback.len();
    let mut k = search.clique_number(all) - 1;

    while k < upper {
        match search.feasible(all, k) {
            Ok(true) => {
                let to_set = |mask: VMask| -> VertexSet { bits(mask).map(|i| active[i]).collect() };
                let parts = search.chosen.iter().map(|&(l, r)| Biclique::new(to_set(l), to_set(r))).collect();
                return Ok(ExactResult {
                    bp: search.chosen.len(),
                    partition: BicliquePartition::new(parts)?,
                    complete: true,
                    lower_bound: search.chosen.len(),
                    expansions: search.expansions,
                });
            }
            Ok(false) => k += 1,
            Err(OutOfBudget) => {
                return Ok(ExactResult {
                    bp: upper,
                    partition: fallback,
                    complete: false,
                    lower_bound: k,
                    expansions: search.expansions,
                });
            }
        }
    }
    Ok(ExactResult {
        bp: upper,
        partition: fallback,
        complete: true,
        lower_bound: upper,
        expansions: search.expansions,
    })
}

/// Clique number `ω(g)`: `α(G^c)` from a perfect elimination ordering when
/// the complement is chordal, else subset enumeration for small graphs.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let gc = g.complement();
    if let (true, Some(sigma)) = is_chordal(&gc)? {
        return Ok(max_independent_set_chordal(&gc, &sigma)?.len());
    }
    if g.n() > BRUTE_OMEGA_LIMIT {
        return Err(Error::OmegaUnavailable { n: g.n() });
    }
    let n = g.n();
    let nbr: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0, |acc, &u| acc | 1 << u)).collect();
    Ok((1u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || (s & !(1 << v)) & !nbr[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// `bp(G) >= ω(G) - 1`.
pub fn lower_bound_omega(g: &Graph) -> Result<usize> {
    Ok(clique_number(g)?.saturating_sub(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundRule {
    /// 1 if the graph has an edge, else 0.
    Trivial,
    /// `ω(G) - 1`.
    CliqueNumber,
    /// `mc(G^c) - 2` for split graphs.
    Split,
    /// `mc(G^c) - 1` for co-chordal graphs.
    CoChordal,
    /// `mc(G^c) - 1` when `G^c` is chordal and clique vertex irreducible.
    Irreducible,
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Trivial => "trivial",
            Self::CliqueNumber => "ω−1",
            Self::Split => "mc(G^c)−2",
            Self::CoChordal => "mc(G^c)−1",
            Self::Irreducible => "irreducible mc(G^c)−1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: usize,
    pub rule: BoundRule,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BoundFlags {
    pub co_chordal: bool,
    pub split: bool,
    pub complement_clique_vertex_irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    NotRun,
    /// The oracle refused the instance (edge cap).
    Skipped(String),
    /// Budget exhausted; best partition size and proven lower bound.
    Incomplete {
        best: usize,
        lower: usize,
    },
    Complete(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub lower: Bound,
    pub upper: Option<Bound>,
    /// `mc(G^c) - 2` when the graph is split.
    pub split_bound: Option<usize>,
    pub omega: Option<usize>,
    pub mc_complement: Option<usize>,
    pub flags: BoundFlags,
    /// The bounds meet by theorem (irreducible complement).
    pub exact_by_theorem: bool,
    pub oracle: OracleOutcome,
}

impl BoundsReport {
    pub fn exact_bp(&self) -> Option<usize> {
        match self.oracle {
            OracleOutcome::Complete(bp) => Some(bp),
            _ => None,
        }
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lower={} ({})", self.lower.value, self.lower.rule)?;
        match self.upper {
            Some(b) => writeln!(f, "upper={} ({})", b.value, b.rule)?,
            None => writeln!(f, "upper=none")?,
        }
        if let Some(w) = self.omega {
            writeln!(f, "omega={w}")?;
        }
        if let Some(mc) = self.mc_complement {
            writeln!(f, "mc_complement={mc}")?;
        }
        if let Some(s) = self.split_bound {
            writeln!(f, "split_bound={s}")?;
        }
        writeln!(
            f,
            "flags: co_chordal={} split={} complement_irreducible={}",
            self.flags.co_chordal, self.flags.split, self.flags.complement_clique_vertex_irreducible
        )?;
        if self.exact_by_theorem {
            writeln!(f, "bp_exact_by_theorem={}", self.lower.value)?;
        }
        match &self.oracle {
            OracleOutcome::NotRun => Ok(()),
            OracleOutcome::Skipped(why) => writeln!(f, "exact=skipped ({why})"),
            OracleOutcome::Incomplete { best, lower } => {
                writeln!(f, "exact=incomplete (best={best}, proven_lower={lower})")
            }
            OracleOutcome::Complete(bp) => writeln!(f, "exact={bp}"),
        }
    }
}

/// Collects every applicable bound on `bp(g)`; with `oracle` set, also runs
/// the exact search.
pub fn bounds_report(g: &Graph, oracle: Option<&OracleConfig>) -> Result<BoundsReport> {
    let mut flags = BoundFlags::default();
    let mut mc_complement = None;
    if g.n() > 0 {
        let gc = g.complement();
        if let (true, Some(sigma)) = is_chordal(&gc)? {
            flags.co_chordal = true;
            mc_complement = Some(maximal_cliques_chordal(&gc, &sigma)?.len());
            flags.complement_clique_vertex_irreducible = is_clique_vertex_irreducible(&gc)?;
        }
    }
    flags.split = is_split(g).0;

    let omega = match clique_number(g) {
        Ok(w) => Some(w),
        Err(Error::OmegaUnavailable { .. }) => None,
        Err(e) => return Err(e),
    };
    let mut lower = match omega {
        Some(w) => Bound { value: w.saturating_sub(1), rule: BoundRule::CliqueNumber },
        None => Bound { value: usize::from(g.m() > 0), rule: BoundRule::Trivial },
    };
    let split_bound = match (flags.split, mc_complement) {
        (true, Some(mc)) => Some(mc.saturating_sub(2)),
        _ => None,
    };
    if let Some(s) = split_bound {
        if s > lower.value {
            lower = Bound { value: s, rule: BoundRule::Split };
        }
    }
    let upper = mc_complement.map(|mc| Bound { value: mc - 1, rule: BoundRule::CoChordal });
    let mut exact_by_theorem = false;
    if let (true, Some(mc)) = (flags.complement_clique_vertex_irreducible, mc_complement) {
        exact_by_theorem = true;
        if mc - 1 > lower.value {
            lower = Bound { value: mc - 1, rule: BoundRule::Irreducible };
        }
    }

    let oracle = match oracle {
        None => OracleOutcome::NotRun,
        Some(cfg) => match exact_bp(g, cfg) {
            Ok(r) if r.complete => OracleOutcome::Complete(r.bp),
            Ok(r) => OracleOutcome::Incomplete { best: r.bp, lower: r.lower_bound },
            Err(e @ Error::EdgeCapExceeded { .. }) => OracleOutcome::Skipped(e.to_string()),
            Err(e) => return Err(e),
        },
    };

    Ok(BoundsReport { lower, upper, split_bound, omega, mc_complement, flags, exact_by_theorem, oracle })
}

/// `bp(G(s)) <= bp(G)`, both computed by the oracle.
pub fn bp_monotonicity_check(g: &Graph, s: &VertexSet, config: &OracleConfig) -> Result<bool> {
    let (sub, _) = g.induced_subgraph(s)?;
    let whole = exact_bp(g, config)?;
    let part = exact_bp(&sub, config)?;
    if !whole.complete || !part.complete {
        return Err(Error::BudgetExceeded { budget: config.budget });
    }
    Ok(part.bp <= whole.bp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{arb_graph, c4, g, p4};
    use crate::partition::{verify_partition, Verdict};
    use proptest::prelude::*;

    fn c5() -> Graph {
        g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    fn star3() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3)])
    }

    fn bp(h: &Graph) -> usize {
        let r = exact_bp(h, &OracleConfig::default()).unwrap();
        assert!(r.complete);
        assert_eq!(verify_partition(h, r.partition.parts()), Verdict::Pass);
        assert_eq!(r.partition.len(), r.bp);
        r.bp
    }

    #[test]
    fn exact_examples() {
        assert_eq!(bp(&Graph::complete(4)), 3);
        assert_eq!(bp(&c4()), 1);
        assert_eq!(bp(&p4()), 2);
        assert_eq!(bp(&Graph::empty(3)), 0);
        assert_eq!(bp(&c5()), 3);
    }

    #[test]
    fn exact_respects_caps() {
        let k7 = Graph::complete(7);
        assert_eq!(
            exact_bp(&k7, &OracleConfig::default()),
            Err(Error::EdgeCapExceeded { m: 21, cap: DEFAULT_EDGE_CAP })
        );
        // Bounds meet on complete graphs, so no search is needed.
        let cfg = OracleConfig { edge_cap: 100, budget: 1 };
        let r = exact_bp(&k7, &cfg).unwrap();
        assert!(r.complete);
        assert_eq!((r.bp, r.expansions), (6, 0));

        let c9 = Graph::from_edges(9, &(0..9).map(|i| (i, (i + 1) % 9)).collect::<Vec<_>>()).unwrap();
        let r = exact_bp(&c9, &cfg).unwrap();
        assert!(!r.complete);
        assert!(r.lower_bound <= r.bp);
        assert_eq!(verify_partition(&c9, r.partition.parts()), Verdict::Pass);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(lower_bound_omega(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(lower_bound_omega(&c4()).unwrap(), 1);
        assert_eq!(lower_bound_omega(&Graph::empty(4)).unwrap(), 0);
        assert_eq!(lower_bound_omega(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(clique_number(&c5()).unwrap(), 2);
        let n = 13;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        // C13's complement is not chordal and it is past the brute-force limit.
        assert_eq!(clique_number(&g(n, &edges)), Err(Error::OmegaUnavailable { n }));
    }

    #[test]
    fn bounds_examples() {
        let r = bounds_report(&star3(), Some(&OracleConfig::default())).unwrap();
        assert_eq!(r.split_bound, Some(0));
        assert_eq!(r.mc_complement, Some(2));
        assert_eq!(r.lower, Bound { value: 1, rule: BoundRule::CliqueNumber });
        assert_eq!(r.upper, Some(Bound { value: 1, rule: BoundRule::CoChordal }));
        assert_eq!(r.exact_bp(), Some(1));
        assert!(r.flags.split && r.flags.co_chordal);

        let r = bounds_report(&Graph::complete(3), None).unwrap();
        assert!(r.exact_by_theorem && r.flags.complement_clique_vertex_irreducible);
        assert_eq!(r.lower.value, 2);
        assert_eq!(r.upper.unwrap().value, 2);
        assert_eq!(r.oracle, OracleOutcome::NotRun);

        let r = bounds_report(&c5(), Some(&OracleConfig::default())).unwrap();
        assert_eq!(r.upper, None);
        assert_eq!(r.lower, Bound { value: 1, rule: BoundRule::CliqueNumber });
        assert!(!r.flags.co_chordal);

        let r = bounds_report(&Graph::complete(4), Some(&OracleConfig::default())).unwrap();
        assert_eq!(r.lower, Bound { value: 3, rule: BoundRule::CliqueNumber });
        assert_eq!(r.upper, Some(Bound { value: 3, rule: BoundRule::CoChordal }));
        assert_eq!(r.exact_bp(), Some(3));
        let text = r.to_string();
        assert!(text.contains("lower=3 (ω−1)"));
        assert!(text.contains("upper=3 (mc(G^c)−1)"));
        assert!(text.contains("exact=3"));
    }

    #[test]
    fn bounds_report_skips_oversized_oracle_runs() {
        let r = bounds_report(&Graph::complete(8), Some(&OracleConfig::default())).unwrap();
        assert!(matches!(r.oracle, OracleOutcome::Skipped(_)));
        assert_eq!(r.lower.value, 7);
    }

    #[test]
    fn irreducible_complement_pins_bp() {
        // Complement cliques {0,1}, {1,2}, {3,4} with private vertices 0, 2, 3.
        let gc = g(5, &[(0, 1), (1, 2), (3, 4)]);
        let r = bounds_report(&gc.complement(), Some(&OracleConfig::default())).unwrap();
        assert!(r.exact_by_theorem);
        assert_eq!(r.mc_complement, Some(3));
        assert_eq!(r.lower.value, 2);
        assert_eq!(r.exact_bp(), Some(2));

        // Path 0-1-2-3-4 as complement: clique {1,2} has no private vertex.
        let gc = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let r = bounds_report(&gc.complement(), None).unwrap();
        assert!(!r.exact_by_theorem && r.flags.co_chordal);
    }

    #[test]
    fn monotonicity_examples() {
        let cfg = OracleConfig::default();
        assert!(bp_monotonicity_check(&Graph::complete(4), &VertexSet::from([0, 1, 2]), &cfg).unwrap());
        assert!(bp_monotonicity_check(&c4(), &VertexSet::from([0, 1]), &cfg).unwrap());
        assert!(bp_monotonicity_check(&p4(), &VertexSet::new(), &cfg).unwrap());
        let tight = OracleConfig { edge_cap: 18, budget: 1 };
        assert_eq!(
            bp_monotonicity_check(&c5(), &VertexSet::from([0, 1, 2, 3]), &tight),
            Err(Error::BudgetExceeded { budget: 1 })
        );
    }

    /// Independent oracle for tiny graphs: breadth-first over the number of
    /// parts, trying every biclique (any two disjoint vertex sets whose cross
    /// pairs are uncovered edges).
    fn naive_bp(h: &Graph) -> usize {
        let n = h.n();
        let edges: Vec<_> = h.edges().collect();
        let index = |u: usize, v: usize| edges.iter().position(|&e| e == (u.min(v), u.max(v)));
        let mut bicliques: Vec<u32> = Vec::new();
        let mut assign = vec![0u8; n];
        loop {
            let mut mask = 0u32;
            let mut ok = true;
            let mut any = false;
            for a in 0..n {
                for b in 0..n {
                    if assign[a] == 1 && assign[b] == 2 {
                        any = true;
                        match index(a, b) {
                            Some(i) => mask |= 1 << i,
                            None => ok = false,
                        }
                    }
                }
            }
            if ok && any {
                bicliques.push(mask);
            }
            let mut i = 0;
            while i < n && assign[i] == 2 {
                assign[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            assign[i] += 1;
        }
        bicliques.sort_unstable();
        bicliques.dedup();
        let full = if edges.is_empty() { 0 } else { (1u32 << edges.len()) - 1 };
        let mut frontier = vec![0u32];
        for k in 0.. {
            if frontier.contains(&full) {
                return k;
            }
            let mut next: Vec<u32> = frontier
                .iter()
                .flat_map(|&c| bicliques.iter().filter(move |&&b| b & c == 0).map(move |&b| b | c))
                .collect();
            next.sort_unstable();
            next.dedup();
            frontier = next;
        }
        unreachable!()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn exact_matches_naive_search(h in arb_graph(5)) {
            prop_assert_eq!(bp(&h), naive_bp(&h));
        }

        #[test]
        fn report_brackets_the_oracle(h in arb_graph(7)) {
            prop_assume!(h.m() <= 14);
            let r = bounds_report(&h, Some(&OracleConfig::default())).unwrap();
            let exact = r.exact_bp().unwrap();
            prop_assert!(r.lower.value <= exact);
            if let Some(u) = r.upper {
                prop_assert!(exact <= u.value);
            }
        }
    }
}
