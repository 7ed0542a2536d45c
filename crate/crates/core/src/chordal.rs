//! Chordality through maximum cardinality search.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

/// Whether every cycle of length at least four has a chord.
pub fn is_chordal(g: &Graph) -> bool {
    if g.n() <= 3 {
        return true;
    }
    let order = elimination_order(g);
    is_perfect_elimination_order(g, &order)
}

/// Reverse of the maximum cardinality search visiting order. For a chordal
/// graph this is a perfect elimination order.
pub fn elimination_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    // Buckets with lazy deletion: a vertex may appear in several buckets,
    // only the entry matching its current weight is live.
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); n.max(1)];
    buckets[0].extend((0..n).rev());
    let mut high = 0;
    let mut visit = Vec::with_capacity(n);

    while visit.len() < n {
        let v = loop {
            match buckets[high].pop() {
                Some(v) if !visited[v] && weight[v] == high => break v,
                Some(_) => {}
                None => high -= 1,
            }
        };
        visited[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                high = high.max(weight[w]);
            }
        }
    }
    visit.reverse();
    visit
}

/// Checks that for every vertex, its neighbors later in `order` form a
/// clique. Uses the parent test: the later neighbors minus the earliest one
/// must all be adjacent to that earliest one.
pub fn is_perfect_elimination_order(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let later = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]);
        let Some(parent) = later.clone().min_by_key(|&w| pos[w]) else {
            continue;
        };
        if later.filter(|&w| w != parent).any(|w| !g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}
