//! Simple undirected graphs over dense vertex ids `0..n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("graph is not a tree ({0})")]
    NotATree(&'static str),
    #[error("{n} vertices exceed the limit of {max}")]
    TooLarge { n: usize, max: usize },
}

/// Strictly increasing list of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from a vector, sorting it and dropping duplicates.
    pub fn from_vec(mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    /// Wraps a vector that is already strictly increasing.
    pub(crate) fn from_sorted(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Checks that every member is a vertex of `g`.
    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= g.n() => Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }),
            _ => Ok(()),
        }
    }

    /// Membership as a dense boolean mask of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = core::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Immutable simple undirected graph.
///
/// Adjacency is stored in compressed rows with every row sorted by neighbor
/// id. Edges also keep the order in which they were supplied; edge ids index
/// into that order and every edge is stored as `(min, max)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<Vertex>,
    incident: Vec<usize>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            neighbors: Vec::new(),
            incident: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }

        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &list {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut slots = vec![(0usize, 0usize); 2 * list.len()];
        for (id, &(u, v)) in list.iter().enumerate() {
            slots[fill[u]] = (v, id);
            fill[u] += 1;
            slots[fill[v]] = (u, id);
            fill[v] += 1;
        }
        for v in 0..n {
            let row = &mut slots[offsets[v]..offsets[v + 1]];
            row.sort_unstable();
            if let Some(pair) = row.windows(2).find(|p| p[0].0 == p[1].0) {
                let w = pair[0].0;
                return Err(GraphError::DuplicateEdge(v.min(w), v.max(w)));
            }
        }
        let (neighbors, incident) = slots.into_iter().unzip();
        Ok(Graph {
            offsets,
            neighbors,
            incident,
            edges: list,
        })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n()
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edge ids incident to `v`, parallel to [`Graph::neighbors`].
    pub fn incident_edges(&self, v: Vertex) -> &[usize] {
        &self.incident[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Index of the first entry of `v`'s row in the adjacency arrays.
    pub(crate) fn row_start(&self, v: Vertex) -> usize {
        self.offsets[v]
    }

    /// Edge id stored at adjacency slot `slot`.
    pub(crate) fn incident_at(&self, slot: usize) -> usize {
        self.incident[slot]
    }

    pub(crate) fn prefetch_incident(&self, slot: usize) {
        crate::tree::prefetch(self.incident.as_ptr().wrapping_add(slot));
    }

    /// Requests the row offsets of `v` ahead of a traversal.
    #[inline]
    pub(crate) fn prefetch_row(&self, v: Vertex) {
        crate::tree::prefetch(self.offsets.as_ptr().wrapping_add(v));
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Maximum degree, 0 for graphs without vertices.
    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges in input order, each as `(min, max)`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n() || v >= self.n() {
            return None;
        }
        let row = self.neighbors(u);
        row.binary_search(&v).ok().map(|i| self.incident_edges(u)[i])
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// `N[v]` in increasing order, without allocating.
    pub fn closed_iter(&self, v: Vertex) -> ClosedNeighbors<'_> {
        ClosedNeighbors {
            row: self.neighbors(v),
            center: Some(v),
        }
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.closed_iter(v).collect()))
    }

    /// `N[u] ∪ N[v]` for the edge `uv`: the vertices whose membership in a
    /// dominating set counts towards that edge.
    pub fn edge_cover_set(&self, u: Vertex, v: Vertex) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok(VertexSet(self.cover_iter(u, v).collect()))
    }

    /// Sorted union of `N[u]` and `N[v]`; no edge check.
    pub(crate) fn cover_iter(&self, u: Vertex, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        SortedUnion {
            a: self.closed_iter(u).peekable(),
            b: self.closed_iter(v).peekable(),
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices` (listed in the order that defines the
    /// new ids). Returns the subgraph and the map from new to old ids.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let sub = Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (sub, vertices.to_vec())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

/// Iterator over a closed neighborhood in increasing order.
pub struct ClosedNeighbors<'a> {
    row: &'a [Vertex],
    center: Option<Vertex>,
}

impl Iterator for ClosedNeighbors<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        match (self.row.first(), self.center) {
            (Some(&x), Some(c)) if c < x => {
                self.center = None;
                Some(c)
            }
            (Some(&x), _) => {
                self.row = &self.row[1..];
                Some(x)
            }
            (None, c) => {
                self.center = None;
                c
            }
        }
    }
}

struct SortedUnion<A: Iterator<Item = Vertex>, B: Iterator<Item = Vertex>> {
    a: core::iter::Peekable<A>,
    b: core::iter::Peekable<B>,
}

impl<A: Iterator<Item = Vertex>, B: Iterator<Item = Vertex>> Iterator for SortedUnion<A, B> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        match (self.a.peek().copied(), self.b.peek().copied()) {
            (Some(x), Some(y)) if x == y => {
                self.a.next();
                self.b.next()
            }
            (Some(x), Some(y)) if x < y => self.a.next(),
            (Some(_), Some(_)) => self.b.next(),
            (Some(_), None) => self.a.next(),
            (None, _) => self.b.next(),
        }
    }
}
