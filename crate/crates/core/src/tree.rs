//! Rooted trees and their processing order.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphError, Vertex};

/// A tree together with a root, parent pointers and a bottom-up order.
///
/// `order` is the reverse of a BFS visiting order from `root`, so depths are
/// non-increasing along it and the root comes last. Per-vertex data is stored
/// by position in `order`: the children of a vertex occupy a contiguous block
/// of positions, which keeps a bottom-up pass over the tree sequential in
/// memory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    root: Vertex,
    order: Vec<Vertex>,
    /// Position of each vertex in `order`.
    index: Vec<u32>,
    /// Position of the parent, `NONE` at the root.
    up: Vec<u32>,
    /// Id of the edge to the parent, `NONE` at the root.
    up_edge: Vec<u32>,
    depth: Vec<u32>,
    /// Children of position `i` are the positions `first_child[i]..first_child[i + 1]`,
    /// in decreasing id order.
    first_child: Vec<u32>,
}

const NONE: u32 = u32::MAX;

/// Largest tree [`bfs_rooted`] accepts. Positions and adjacency slots are
/// stored as `u32`, with `u32::MAX` reserved.
pub const MAX_TREE_VERTICES: usize = 1 << 31;

fn some(x: u32) -> Option<usize> {
    (x != NONE).then_some(x as usize)
}

impl RootedTree {
    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent_position(self.position(v)).map(|p| self.order[p])
    }

    /// Id of the edge from `v` to its parent.
    pub fn parent_edge(&self, v: Vertex) -> Option<usize> {
        self.parent_edge_at(self.position(v))
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[self.position(v)] as usize
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Position of `v` in [`RootedTree::order`].
    pub fn position(&self, v: Vertex) -> usize {
        self.index[v] as usize
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Children of `v` in increasing id order.
    pub fn children(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.child_positions(self.position(v)).rev().map(move |j| self.order[j])
    }

    pub(crate) fn parent_position(&self, i: usize) -> Option<usize> {
        some(self.up[i])
    }

    pub(crate) fn parent_edge_at(&self, i: usize) -> Option<usize> {
        some(self.up_edge[i])
    }

    /// Positions of the children of position `i`, in decreasing id order.
    pub(crate) fn child_positions(&self, i: usize) -> core::ops::Range<usize> {
        self.first_child[i] as usize..self.first_child[i + 1] as usize
    }
}

/// How many entries ahead random-access passes request their targets.
pub(crate) const PREFETCH_ROWS: usize = 32;

/// Hints that `*ptr` will be read soon. Never faults.
#[inline(always)]
pub(crate) fn prefetch<T>(ptr: *const T) {
    #[cfg(target_arch = "x86_64")]
    // SAFETY: prefetch instructions do not dereference the address
    // architecturally and cannot fault, whatever `ptr` is.
    unsafe {
        use core::arch::x86_64::{_mm_prefetch, _MM_HINT_T0};
        _mm_prefetch::<_MM_HINT_T0>(ptr.cast());
    }
    #[cfg(not(target_arch = "x86_64"))]
    let _ = ptr;
}

/// Roots the tree `g` at `root`.
pub fn bfs_rooted(g: &Graph, root: Vertex) -> Result<RootedTree, GraphError> {
    g.check_vertex(root)?;
    let n = g.n();
    if n > MAX_TREE_VERTICES {
        return Err(GraphError::TooLarge {
            n,
            max: MAX_TREE_VERTICES,
        });
    }
    if g.m() != n - 1 {
        return Err(GraphError::NotATree("edge count is not n - 1"));
    }
    // BFS positions first; the visit list doubles as the queue. In a tree the
    // only visited neighbor of `v` is its parent, so no visited marks are
    // needed. With `m = n - 1`, a reachable cycle shows up as the visit list
    // outgrowing `n`.
    let mut visit = Vec::with_capacity(n);
    let mut up = Vec::with_capacity(n);
    let mut up_edge = Vec::with_capacity(n);
    let mut depth = Vec::with_capacity(n);
    let mut child_start = Vec::with_capacity(n + 1);
    visit.push(root);
    up.push(NONE);
    up_edge.push(NONE);
    depth.push(0u32);
    let mut head = 0;
    while let Some(&v) = visit.get(head) {
        // The queue shows which rows come next; requesting them early
        // overlaps the cache misses of a randomly numbered tree.
        if let Some(&ahead) = visit.get(head + PREFETCH_ROWS) {
            prefetch(g.neighbors(ahead).as_ptr());
        }
        if let Some(&ahead) = visit.get(head + 2 * PREFETCH_ROWS) {
            g.prefetch_row(ahead);
        }
        child_start.push(visit.len() as u32);
        let parent = some(up[head]).map_or(usize::MAX, |p| visit[p]);
        let d = depth[head] + 1;
        // Adjacency slots for now; edge ids are looked up in one pass later.
        let start = g.row_start(v);
        for (j, &w) in g.neighbors(v).iter().enumerate() {
            if w != parent {
                visit.push(w);
                up.push(head as u32);
                up_edge.push((start + j) as u32);
                depth.push(d);
            }
        }
        if visit.len() > n {
            return Err(GraphError::NotATree("contains a cycle"));
        }
        head += 1;
    }
    if visit.len() != n {
        return Err(GraphError::NotATree("disconnected"));
    }
    child_start.push(n as u32);
    for i in 1..n {
        if let Some(&ahead) = up_edge.get(i + PREFETCH_ROWS) {
            g.prefetch_incident(ahead as usize);
        }
        up_edge[i] = g.incident_at(up_edge[i] as usize) as u32;
    }

    // Reverse everything into bottom-up positions i = n - 1 - p.
    let last = (n - 1) as u32;
    visit.reverse();
    up.reverse();
    up_edge.reverse();
    depth.reverse();
    for p in &mut up {
        if *p != NONE {
            *p = last - *p;
        }
    }
    let mut index = vec![0u32; n];
    for (i, &v) in visit.iter().enumerate() {
        if let Some(&ahead) = visit.get(i + PREFETCH_ROWS) {
            prefetch(index.as_ptr().wrapping_add(ahead));
        }
        index[v] = i as u32;
    }
    let first_child = (0..=n).map(|i| n as u32 - child_start[n - i]).collect();
    Ok(RootedTree {
        root,
        order: visit,
        index,
        up,
        up_edge,
        depth,
        first_child,
    })
}

/// Whether `g` has no cycles.
pub fn is_forest(g: &Graph) -> bool {
    g.m() + g.components().len() == g.n()
}

/// A vertex of minimum eccentricity (the smaller id when the tree has two
/// centers), found by peeling leaves layer by layer.
pub fn tree_center(g: &Graph) -> Result<Vertex, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::NotATree("no vertices"));
    }
    if g.m() != n - 1 || !g.is_connected() {
        return Err(GraphError::NotATree("not a connected acyclic graph"));
    }
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut layer: Vec<Vertex> = g.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    Ok(*layer.iter().min().expect("a non-empty tree has a center"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_rooted_at_end() {
        let t = bfs_rooted(&Graph::path(3), 0).unwrap();
        assert_eq!([t.parent(0), t.parent(1), t.parent(2)], [None, Some(0), Some(1)]);
        assert_eq!(t.order(), &[2, 1, 0]);
        assert_eq!(t.parent_edge(2), Some(1));
        assert_eq!(*t.order().last().unwrap(), 0);
    }

    #[test]
    fn star_leaves_first() {
        let t = bfs_rooted(&Graph::star(3), 0).unwrap();
        assert_eq!(t.order().len(), 4);
        assert_eq!(t.order()[3], 0);
        assert!(t.order()[..3].iter().all(|&v| v != 0));
    }

    #[test]
    fn children_in_id_order() {
        let g = Graph::from_edges(6, [(0, 4), (0, 2), (2, 5), (0, 1), (2, 3)]).unwrap();
        let t = bfs_rooted(&g, 0).unwrap();
        assert_eq!(t.children(0).collect::<Vec<_>>(), [1, 2, 4]);
        assert_eq!(t.children(2).collect::<Vec<_>>(), [3, 5]);
        assert_eq!(t.children(5).count(), 0);
        for v in 1..6 {
            let p = t.parent(v).unwrap();
            assert!(t.children(p).any(|c| c == v));
            assert_eq!(t.depth(v), t.depth(p) + 1);
            assert_eq!(t.order()[t.position(v)], v);
        }
    }

    #[test]
    fn depths_non_increasing() {
        let t = bfs_rooted(&Graph::path(5), 2).unwrap();
        assert_eq!(*t.order().last().unwrap(), 2);
        assert!(t.order().windows(2).all(|w| t.depth(w[0]) >= t.depth(w[1])));
    }

    #[test]
    fn rejects_non_trees() {
        assert!(bfs_rooted(&Graph::cycle(4), 0).is_err());
        let forest = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(bfs_rooted(&forest, 0).is_err());
        assert!(bfs_rooted(&Graph::path(3), 3).is_err());
        assert!(is_forest(&forest));
        assert!(!is_forest(&Graph::cycle(3)));
    }

    #[test]
    fn centers() {
        assert_eq!(tree_center(&Graph::path(5)).unwrap(), 2);
        assert_eq!(tree_center(&Graph::path(4)).unwrap(), 1);
        assert_eq!(tree_center(&Graph::path(2)).unwrap(), 0);
        assert_eq!(tree_center(&Graph::empty(1)).unwrap(), 0);
        assert_eq!(tree_center(&Graph::star(4)).unwrap(), 0);
    }
}
