//! Seeded random graph corpora for verification sweeps.

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with loops and duplicates impossible by construction.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Resamples G(n, p) until connected (n >= 1).
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 1);
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random tree by uniform attachment: vertex i >= 1 joins a random earlier
/// vertex.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 1);
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Edge probabilities cycled through by [`random_connected_corpus`].
pub const CORPUS_PS: [f64; 4] = [0.2, 0.4, 0.6, 0.8];

/// Seeded corpus of connected graphs with n drawn from `n_lo..=n_hi` and
/// edge probability cycling through [`CORPUS_PS`].
pub fn random_connected_corpus(seed: u64, count: usize, n_lo: usize, n_hi: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(n_lo..=n_hi);
            random_connected_graph(&mut r, n, CORPUS_PS[i % CORPUS_PS.len()])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_reproducibility() {
        let a = random_graph(&mut rng(7), 8, 0.5);
        let b = random_graph(&mut rng(7), 8, 0.5);
        assert_eq!(a, b);
    }

    #[test]
    fn trees_are_trees() {
        let mut r = rng(3);
        for n in 1..=10 {
            let t = random_tree(&mut r, n);
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected());
            assert!(t.is_bipartite());
        }
    }

    #[test]
    fn connected_graphs_are_connected() {
        let mut r = rng(11);
        for _ in 0..20 {
            let n = r.gen_range(4..=9);
            let g = random_connected_graph(&mut r, n, 0.4);
            assert!(g.is_connected());
        }
    }
}
