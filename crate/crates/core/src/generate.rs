//! Seeded random instance generators.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Uniformly random labeled tree on `n` vertices, decoded from a random
/// Prüfer sequence in linear time.
pub fn gen_random_tree(n: usize, seed: u64) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, prufer_decode(n, &code)).expect("Prüfer decoding yields a tree")
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("some vertex is a leaf");
    let mut leaf = ptr;
    for &x in code {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Erdős–Rényi graph: each of the `n(n-1)/2` pairs is an edge with
/// probability `p` (clamped to `[0, 1]`).
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_trees() {
        assert_eq!(gen_random_tree(1, 7), Graph::empty(1));
        for n in 2..40 {
            let g = gen_random_tree(n, n as u64);
            assert_eq!(g.m(), n - 1);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn graph_extremes() {
        assert_eq!(gen_random_graph(5, 0.0, 3).m(), 0);
        assert_eq!(gen_random_graph(4, 1.0, 0), Graph::complete(4));
    }

    #[test]
    fn deterministic() {
        assert_eq!(gen_random_tree(50, 11), gen_random_tree(50, 11));
        assert_eq!(gen_random_graph(20, 0.3, 5), gen_random_graph(20, 0.3, 5));
        assert_ne!(gen_random_tree(50, 11), gen_random_tree(50, 12));
    }

    #[test]
    fn prufer_known_code() {
        // Code [3, 3, 3] on 5 vertices is the star centered at 3 plus edge 3-4.
        let mut edges = prufer_decode(5, &[3, 3, 3]);
        edges.sort_unstable();
        assert_eq!(edges, [(0, 3), (1, 3), (2, 3), (3, 4)]);
    }
}
