//! Seeded instance generators.
//!
//! Random kinds draw from `ChaCha8Rng::seed_from_u64(seed)`, so a spec always
//! produces the same graph on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GenSpec {
    /// Chordal graph grown by simplicial insertion. Vertex `i` picks a
    /// uniformly random earlier vertex `j` and joins each member of the
    /// clique `j` was attached to (plus `j`) with probability `density`.
    Chordal {
        n: usize,
        density: f64,
        seed: u64,
    },
    /// Clique on `0..clique`, independent set on the rest, each cross pair
    /// present with probability `density`.
    Split {
        clique: usize,
        independent: usize,
        density: f64,
        seed: u64,
    },
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// Star with center 0.
    Star {
        leaves: usize,
    },
    Empty {
        n: usize,
    },
    ErdosRenyi {
        n: usize,
        density: f64,
        seed: u64,
    },
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        let density = match *self {
            Self::Chordal { density, .. } | Self::Split { density, .. } | Self::ErdosRenyi { density, .. } => {
                Some(density)
            }
            _ => None,
        };
        if let Some(d) = density {
            if !(0.0..=1.0).contains(&d) {
                return Err(Error::InvalidSpec(format!("density {d} outside [0, 1]")));
            }
        }
        if let Self::Cycle { n } = *self {
            if n < 3 {
                return Err(Error::InvalidSpec(format!("cycle needs at least 3 vertices, got {n}")));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        match *self {
            Self::Chordal { n, .. }
            | Self::Complete { n }
            | Self::Cycle { n }
            | Self::Path { n }
            | Self::Empty { n }
            | Self::ErdosRenyi { n, .. } => n,
            Self::Split { clique, independent, .. } => clique + independent,
            Self::Star { leaves } => leaves + 1,
        }
    }

    /// Same spec with a different seed (no-op for deterministic kinds).
    pub fn with_seed(self, new_seed: u64) -> Self {
        match self {
            Self::Chordal { n, density, .. } => Self::Chordal { n, density, seed: new_seed },
            Self::Split { clique, independent, density, .. } => {
                Self::Split { clique, independent, density, seed: new_seed }
            }
            Self::ErdosRenyi { n, density, .. } => Self::ErdosRenyi { n, density, seed: new_seed },
            other => other,
        }
    }
}

pub fn gen(spec: &GenSpec) -> Result<Graph> {
    spec.validate()?;
    let graph = match *spec {
        GenSpec::Chordal { n, density, seed } => chordal(n, density, seed),
        GenSpec::Split { clique, independent, density, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
            for u in 0..clique {
                edges.extend((u + 1..clique).map(|v| (u, v)));
            }
            for u in 0..clique {
                for v in clique..clique + independent {
                    if rng.random_bool(density) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(clique + independent, &edges)?
        }
        GenSpec::Complete { n } => Graph::complete(n),
        GenSpec::Cycle { n } => {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)?
        }
        GenSpec::Path { n } => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)?
        }
        GenSpec::Star { leaves } => {
            let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
            Graph::from_edges(leaves + 1, &edges)?
        }
        GenSpec::Empty { n } => Graph::empty(n),
        GenSpec::ErdosRenyi { n, density, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(density) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)?
        }
    };
    Ok(graph)
}

fn chordal(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    // attached[i]: the clique vertex i joined, including i.
    let mut attached: Vec<Vec<Vertex>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut chosen = Vec::new();
        if i > 0 {
            let j = rng.random_range(0..i);
            for &u in &attached[j] {
                if rng.random_bool(density) {
                    chosen.push(u);
                }
            }
        }
        for &u in &chosen {
            adj[u].push(i);
            adj[i].push(u);
        }
        chosen.push(i);
        attached.push(chosen);
    }
    Graph::from_adjacency(adj)
}

/// Complement of a generated chordal graph.
pub fn gen_co_chordal(spec: &GenSpec) -> Result<Graph> {
    match spec {
        GenSpec::Chordal { .. } => Ok(gen(spec)?.complement()),
        other => Err(Error::InvalidSpec(format!("co-chordal generation needs a chordal spec, got {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::is_split;
    use crate::heuristics::{partition_auto, EdgeChoiceStrategy, Method};
    use crate::ordering::is_chordal;

    #[test]
    fn named_kinds() {
        assert_eq!(gen(&GenSpec::Complete { n: 4 }).unwrap(), Graph::complete(4));
        assert_eq!(gen(&GenSpec::Cycle { n: 5 }).unwrap().m(), 5);
        assert_eq!(gen(&GenSpec::Path { n: 4 }).unwrap().m(), 3);
        let star = gen(&GenSpec::Star { leaves: 3 }).unwrap();
        assert_eq!((star.n(), star.degree(0)), (4, 3));
        assert_eq!(gen(&GenSpec::Empty { n: 3 }).unwrap(), Graph::empty(3));
        assert_eq!(GenSpec::Split { clique: 4, independent: 4, density: 0.3, seed: 1 }.n(), 8);
    }

    #[test]
    fn chordal_kind_is_chordal() {
        let h = gen(&GenSpec::Chordal { n: 30, density: 0.5, seed: 7 }).unwrap();
        assert_eq!(h.n(), 30);
        assert!(is_chordal(&h).unwrap().0);
        for seed in 0..50 {
            for density in [0.0, 0.2, 0.5, 0.9, 1.0] {
                let h = gen(&GenSpec::Chordal { n: 25, density, seed }).unwrap();
                assert!(is_chordal(&h).unwrap().0);
            }
        }
    }

    #[test]
    fn split_kind_is_split() {
        let h = gen(&GenSpec::Split { clique: 4, independent: 4, density: 0.3, seed: 1 }).unwrap();
        assert!(is_split(&h).0);
        for seed in 0..50 {
            let h = gen(&GenSpec::Split { clique: 5, independent: 7, density: 0.5, seed }).unwrap();
            assert!(is_split(&h).0);
        }
    }

    #[test]
    fn co_chordal_kind() {
        let spec = GenSpec::Chordal { n: 10, density: 0.5, seed: 3 };
        let h = gen_co_chordal(&spec).unwrap();
        assert!(partition_auto(&h, Method::Lexbfs, EdgeChoiceStrategy::FirstCanonical).is_ok());
        assert_eq!(h, gen_co_chordal(&spec).unwrap());
        assert_eq!(
            gen_co_chordal(&GenSpec::Chordal { n: 6, density: 1.0, seed: 0 }).unwrap().m(),
            gen(&GenSpec::Chordal { n: 6, density: 1.0, seed: 0 }).unwrap().complement().m()
        );
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
        assert!(gen_co_chordal(&GenSpec::Complete { n: 3 }).is_err());
    }

    #[test]
    fn seeds_are_deterministic_and_matter() {
        let a = GenSpec::ErdosRenyi { n: 20, density: 0.5, seed: 11 };
        assert_eq!(gen(&a).unwrap(), gen(&a).unwrap());
        assert_ne!(gen(&a).unwrap(), gen(&a.with_seed(12)).unwrap());
    }

    #[test]
    fn invalid_specs() {
        assert!(gen(&GenSpec::Chordal { n: 5, density: 1.5, seed: 0 }).is_err());
        assert!(gen(&GenSpec::ErdosRenyi { n: 5, density: -0.1, seed: 0 }).is_err());
        assert!(gen(&GenSpec::Cycle { n: 2 }).is_err());
    }
}
