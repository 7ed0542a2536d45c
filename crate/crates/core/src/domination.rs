//! The k-vertex-edge domination predicate and related checks.
//!
//! Every edge-quantified predicate here is vacuously true on edgeless graphs,
//! and `k = 0` is satisfied by any set.

use alloc::vec::Vec;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

/// Number of `in_set` vertices in `N[u] ∪ N[v]`.
pub(crate) fn cover_count(g: &Graph, u: Vertex, v: Vertex, in_set: &[bool]) -> usize {
    g.cover_iter(u, v).filter(|&x| in_set[x]).count()
}

/// Size of `N[u] ∪ N[v]` for an edge `uv`.
pub(crate) fn cover_size(g: &Graph, u: Vertex, v: Vertex) -> usize {
    // |N[u]| + |N[v]| minus the shared part {u, v} ∪ (N(u) ∩ N(v)).
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    a.len() + b.len() - common
}

/// First edge (in input order) whose cover set meets `d` in fewer than `k`
/// vertices.
pub fn first_violation(g: &Graph, d: &VertexSet, k: usize) -> Result<Option<(Vertex, Vertex)>, GraphError> {
    d.check(g)?;
    let mask = d.mask(g.n());
    Ok(g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| cover_count(g, u, v, &mask) < k))
}

/// Whether `d` is a k-vertex-edge dominating set of `g`.
pub fn verify_kve(g: &Graph, d: &VertexSet, k: usize) -> Result<bool, GraphError> {
    Ok(first_violation(g, d, k)?.is_none())
}

/// Whether any k-vertex-edge dominating set exists, i.e. whether every edge
/// cover set has at least `k` vertices.
pub fn feasible(g: &Graph, k: usize) -> bool {
    g.edges().iter().all(|&(u, v)| cover_size(g, u, v) >= k)
}

/// Whether `|N[v] ∩ d| >= k` for every vertex `v`.
pub fn verify_ktuple(g: &Graph, d: &VertexSet, k: usize) -> Result<bool, GraphError> {
    d.check(g)?;
    let mask = d.mask(g.n());
    Ok(g.vertices().all(|v| g.closed_iter(v).filter(|&x| mask[x]).count() >= k))
}

/// Smallest edge cover set size over all edges, `None` when edgeless.
pub fn min_cover_size(g: &Graph) -> Option<usize> {
    g.edges().iter().map(|&(u, v)| cover_size(g, u, v)).min()
}

/// For each edge (by id), how many vertices of `d` its cover set contains.
pub fn cover_counts(g: &Graph, d: &VertexSet) -> Result<Vec<usize>, GraphError> {
    d.check(g)?;
    let mask = d.mask(g.n());
    Ok(g.edges().iter().map(|&(u, v)| cover_count(g, u, v, &mask)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        VertexSet::from_vec(v.to_vec())
    }

    #[test]
    fn verify_examples() {
        let k2 = Graph::path(2);
        assert!(verify_kve(&k2, &set(&[0]), 1).unwrap());
        assert!(!verify_kve(&k2, &set(&[]), 1).unwrap());
        let p5 = Graph::path(5);
        assert!(verify_kve(&p5, &set(&[1, 2, 3]), 2).unwrap());
        assert_eq!(first_violation(&p5, &set(&[2]), 2).unwrap(), Some((0, 1)));
        assert!(verify_kve(&Graph::empty(4), &set(&[]), 5).unwrap());
        assert!(verify_kve(&k2, &set(&[3]), 1).is_err());
    }

    #[test]
    fn feasibility_examples() {
        let k2 = Graph::path(2);
        assert!(feasible(&k2, 2));
        assert!(!feasible(&k2, 3));
        // Leaf edges of P5 have cover sets of size 3.
        let p5 = Graph::path(5);
        assert_eq!(min_cover_size(&p5), Some(3));
        assert!(feasible(&p5, 3));
        assert!(!feasible(&p5, 4));
        assert!(feasible(&Graph::empty(3), 100));
    }

    #[test]
    fn cover_size_matches_cover_set() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (1, 5)]).unwrap();
        for &(u, v) in g.edges() {
            assert_eq!(cover_size(&g, u, v), g.edge_cover_set(u, v).unwrap().len());
        }
    }

    #[test]
    fn ktuple_predicate() {
        let k3 = Graph::complete(3);
        assert!(verify_ktuple(&k3, &set(&[0, 1]), 2).unwrap());
        assert!(!verify_ktuple(&k3, &set(&[0]), 2).unwrap());
    }
}
