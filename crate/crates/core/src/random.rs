//! Seeded random graph generators.
//!
//! Every generator draws from `ChaCha8Rng::seed_from_u64(seed)`, so a
//! given `(parameters, seed)` pair produces the same graph on every
//! platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
///
/// Pairs `(u, v)`, `u < v`, are visited in lexicographic order and
/// selected by geometric skipping, which costs `O(n + m)` for sparse `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability must lie in [0, 1]"
    );
    let mut edges = Vec::new();
    if p >= 1.0 {
        for u in 0..n {
            edges.extend((u + 1..n).map(|v| (u, v)));
        }
    } else if p > 0.0 && n >= 2 {
        let mut rng = rng(seed);
        let log_q = (1.0 - p).ln();
        let (mut u, mut v) = (0usize, 0usize);
        loop {
            let r: f64 = rng.gen();
            let skip = ((1.0 - r).ln() / log_q).floor() as usize;
            v += 1 + skip;
            while v >= n {
                u += 1;
                if u + 1 >= n {
                    return Graph::from_edges_unchecked(n, edges);
                }
                v = v - n + u + 1;
            }
            edges.push((u, v));
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

/// Random recursive forest: vertex `v >= 1` attaches to a uniformly
/// chosen earlier vertex with probability 0.95, otherwise it starts a
/// new tree.
pub fn random_forest(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::with_capacity(n);
    for v in 1..n {
        if rng.gen_bool(0.95) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

/// Forest with a skewed degree distribution: vertex `v` attaches to an
/// earlier vertex chosen proportionally to `degree + 1`, or stays a new
/// root with probability `root_prob`. Produces hubs and caterpillar-like
/// shapes that uniform attachment rarely hits.
pub fn preferential_forest(n: usize, root_prob: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::with_capacity(n);
    // each vertex appears once, plus once per incident edge
    let mut urn: Vec<Vertex> = Vec::with_capacity(3 * n);
    for v in 0..n {
        if v > 0 && !rng.gen_bool(root_prob) {
            let u = urn[rng.gen_range(0..urn.len())];
            edges.push((u, v));
            urn.push(u);
            urn.push(v);
        }
        urn.push(v);
    }
    Graph::from_edges_unchecked(n, edges)
}

/// Random graph with maximum degree at most `max_degree`: candidate pairs
/// are visited in a shuffled order and each is kept with probability `p`
/// when both endpoints still have spare degree.
pub fn random_bounded_degree(n: usize, max_degree: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p));
    let mut rng = rng(seed);
    let mut pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < max_degree && deg[v] < max_degree && rng.gen_bool(p) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

/// Graph with exactly `m` edges chosen uniformly (`m` is clamped to the
/// number of pairs).
pub fn random_graph_with_edges(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = m.min(pairs.len());
    let (chosen, _) = pairs.partial_shuffle(&mut rng, m);
    Graph::from_edges_unchecked(n, chosen.iter().copied())
}

/// The labeled graph on `n` vertices whose edge set is encoded by the low
/// bits of `code`, pairs `(u, v)` with `u < v` taken in lexicographic
/// order. Enumerating `code` over `0..2^(n(n-1)/2)` visits every labeled
/// graph exactly once.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_probabilities() {
        assert_eq!(random_graph(5, 0.0, 7).edge_count(), 0);
        assert_eq!(random_graph(5, 1.0, 7).edge_count(), 10);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        assert_eq!(random_graph(40, 0.2, 3), random_graph(40, 0.2, 3));
        assert_eq!(random_forest(50, 9), random_forest(50, 9));
        assert_ne!(random_graph(40, 0.2, 3), random_graph(40, 0.2, 4));
    }

    #[test]
    fn random_graph_density_is_plausible() {
        let g = random_graph(400, 0.05, 1);
        let expected = 0.05 * (400.0 * 399.0 / 2.0);
        let m = g.edge_count() as f64;
        assert!((m - expected).abs() < 0.1 * expected, "{m} vs {expected}");
        g.validate().unwrap();
    }

    #[test]
    fn forests_are_forests() {
        for seed in 0..20 {
            let f = random_forest(100, seed);
            assert!(f.is_forest());
            assert!(f.edge_count() <= 99);
            let f = preferential_forest(100, 0.05, seed);
            assert!(f.is_forest());
        }
    }

    #[test]
    fn bounded_degree_respected() {
        for seed in 0..20 {
            let g = random_bounded_degree(12, 2, 0.5, seed);
            assert!(g.max_degree().unwrap() <= 2);
            g.validate().unwrap();
        }
    }

    #[test]
    fn labeled_graph_codes() {
        assert_eq!(labeled_graph(3, 0).edge_count(), 0);
        assert_eq!(labeled_graph(3, 0b111).edge_count(), 3);
        let g = labeled_graph(4, 0b000001);
        assert!(g.has_edge(0, 1));
        assert_eq!(random_graph_with_edges(6, 7, 2).edge_count(), 7);
    }
}
