//! Exact minimum (s,t)-dominating sets of trees in linear time.
//!
//! An (s,t)-labeling marks every vertex [`Label::Free`] or
//! [`Label::Required`] and gives every edge a demand `s(e)`. A set `D` is
//! (s,t)-dominating when it contains every required vertex and, for every
//! edge `uv`, `|(N[u] ∪ N[v]) ∩ D| >= s(uv)`. Uniform demand `k` with no
//! required vertex is exactly k-vertex-edge domination.
//!
//! The solver walks the tree bottom-up. When a vertex `u` with parent `w` is
//! reached, all of its children are leaves and share the cover set `N[u]`,
//! so only the largest child demand matters. Depending on that demand and
//! the required vertices around `u`, the children are removed, some of them
//! are committed to `D`, `u` and/or `w` may become required, and the demand
//! on `uw` is lowered by what was committed. The residual star left at the
//! root is completed directly.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::tree::{prefetch, RootedTree, PREFETCH_ROWS};
use crate::Outcome;

/// Vertex label of an (s,t)-labeling. Written `B` and `R` in files.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Label {
    /// May or may not be chosen (`B`).
    #[default]
    Free,
    /// Must be in the dominating set (`R`).
    Required,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LabelError {
    #[error("expected {expected} vertex labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("expected {expected} edge demands, found {found}")]
    DemandCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per-vertex labels and per-edge demands, edges indexed by
/// [`Graph::edges`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StLabeling {
    labels: Vec<Label>,
    demands: Vec<u32>,
}

impl StLabeling {
    /// All vertices free, every edge demanding `k`.
    pub fn uniform(g: &Graph, k: u32) -> Self {
        StLabeling {
            labels: vec![Label::Free; g.n()],
            demands: vec![k; g.m()],
        }
    }

    pub fn new(g: &Graph, labels: Vec<Label>, demands: Vec<u32>) -> Result<Self, LabelError> {
        if labels.len() != g.n() {
            return Err(LabelError::LabelCount {
                expected: g.n(),
                found: labels.len(),
            });
        }
        if demands.len() != g.m() {
            return Err(LabelError::DemandCount {
                expected: g.m(),
                found: demands.len(),
            });
        }
        Ok(StLabeling { labels, demands })
    }

    pub fn label(&self, v: Vertex) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn demands(&self) -> &[u32] {
        &self.demands
    }

    pub fn set_label(&mut self, v: Vertex, label: Label) {
        self.labels[v] = label;
    }

    pub fn set_demand(&mut self, g: &Graph, u: Vertex, v: Vertex, s: u32) -> Result<(), GraphError> {
        let id = g.edge_id(u, v).ok_or(GraphError::NotAnEdge(u, v))?;
        self.demands[id] = s;
        Ok(())
    }

    fn check(&self, g: &Graph) -> Result<(), LabelError> {
        self.check_counts(g.n(), g.m())
    }

    fn check_counts(&self, n: usize, m: usize) -> Result<(), LabelError> {
        if self.labels.len() != n {
            return Err(LabelError::LabelCount {
                expected: n,
                found: self.labels.len(),
            });
        }
        if self.demands.len() != m {
            return Err(LabelError::DemandCount {
                expected: m,
                found: self.demands.len(),
            });
        }
        Ok(())
    }
}

/// Whether `d` is an (s,t)-dominating set of `g` under `labeling`.
pub fn verify_st(g: &Graph, labeling: &StLabeling, d: &VertexSet) -> Result<bool, LabelError> {
    labeling.check(g)?;
    d.check(g)?;
    let mask = d.mask(g.n());
    let required_ok = g.vertices().all(|v| labeling.label(v) == Label::Free || mask[v]);
    let demands_ok = g
        .edges()
        .iter()
        .zip(labeling.demands())
        .all(|(&(u, v), &s)| crate::domination::cover_count(g, u, v, &mask) >= s as usize);
    Ok(required_ok && demands_ok)
}

/// Which reduction a support vertex went through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Not a support vertex at its turn (no live children, or the root).
    Skipped,
    /// A demand exceeds the size of its cover set.
    Infeasible,
    /// A demand equals its cover set size: every leaf is taken and `u`, `w`
    /// become required.
    Saturated,
    /// The required vertices around `u` already meet the leaf demand.
    Covered,
    /// One vertex short of the leaf demand: `w` becomes required.
    PromoteParent,
    /// Two or more short: `u` and `w` become required and the remaining gap
    /// is filled with free leaves.
    PromoteBoth,
}

/// Per-vertex solver bookkeeping, packed so that one vertex is one load.
#[derive(Clone, Copy, Debug)]
struct Node {
    /// `s(v, parent(v))`; unused at the root.
    up_demand: u32,
    live_degree: u32,
    label: Label,
    alive: bool,
    in_set: bool,
}

/// Mutable state of one solver run over a rooted tree.
///
/// State is kept by position in the tree's bottom-up order, so a full run
/// touches memory sequentially.
#[derive(Clone, Debug)]
pub struct SolverState<'a> {
    tree: &'a RootedTree,
    nodes: Vec<Node>,
    infeasible: bool,
    topped_up: usize,
}

impl<'a> SolverState<'a> {
    pub fn new(tree: &'a RootedTree, labeling: &StLabeling) -> Result<Self, LabelError> {
        labeling.check_counts(tree.n(), tree.n().saturating_sub(1))?;
        Ok(Self::build(
            tree,
            |i| tree.parent_edge_at(i).map_or(0, |id| labeling.demands()[id]),
            |i| labeling.label(tree.order()[i]),
        ))
    }

    /// State for uniform demand `k` with every vertex free.
    pub fn uniform(tree: &'a RootedTree, k: u32) -> Self {
        Self::build(
            tree,
            |i| if tree.parent_position(i).is_some() { k } else { 0 },
            |_| Label::Free,
        )
    }

    fn build(tree: &'a RootedTree, demand: impl Fn(usize) -> u32, label: impl Fn(usize) -> Label) -> Self {
        let nodes = (0..tree.n())
            .map(|i| Node {
                up_demand: demand(i),
                live_degree: (tree.child_positions(i).len() + usize::from(tree.parent_position(i).is_some())) as u32,
                label: label(i),
                alive: true,
                in_set: false,
            })
            .collect();
        SolverState {
            tree,
            nodes,
            infeasible: false,
            topped_up: 0,
        }
    }

    pub fn tree(&self) -> &RootedTree {
        self.tree
    }

    fn node(&self, v: Vertex) -> &Node {
        &self.nodes[self.tree.position(v)]
    }

    pub fn label(&self, v: Vertex) -> Label {
        self.node(v).label
    }

    /// Current demand on the edge from `v` to its parent.
    pub fn up_demand(&self, v: Vertex) -> u32 {
        self.node(v).up_demand
    }

    pub fn is_alive(&self, v: Vertex) -> bool {
        self.node(v).alive
    }

    pub fn is_infeasible(&self) -> bool {
        self.infeasible
    }

    /// Vertices committed to the dominating set so far.
    pub fn chosen(&self) -> VertexSet {
        let order = self.tree.order();
        let mut mask = vec![false; self.nodes.len()];
        for (i, (node, &v)) in self.nodes.iter().zip(order).enumerate() {
            if let Some(&ahead) = order.get(i + PREFETCH_ROWS) {
                prefetch(mask.as_ptr().wrapping_add(ahead));
            }
            mask[v] = node.in_set;
        }
        VertexSet::from_sorted((0..mask.len()).filter(|&v| mask[v]).collect())
    }

    /// Number of leaves committed only to serve the parent edge of their
    /// support vertex (see [`SolverState::process_support_vertex`]).
    pub fn topped_up(&self) -> usize {
        self.topped_up
    }

    /// Applies the matching reduction at `u`, which must come at its turn in
    /// the tree's bottom-up order so that every live child of `u` is a leaf.
    ///
    /// With `v` the child of largest demand `a = s(uv)` (smallest id on ties),
    /// `b = s(uw)`, `f` the required children and `r` the required vertices
    /// of `N[u]`:
    ///
    /// 1. `a > |N[u]|` or `b > |N[u] ∪ N[w]|`: infeasible.
    /// 2. equality in either: all children join `D`, `u` and `w` become
    ///    required, `b -= |c(u)|`.
    /// 3. `a <= r`: required children join `D`, `b -= f`.
    /// 4. `a - f = 1`: as 3, and `w` becomes required.
    /// 5. otherwise `u` and `w` become required, required children plus
    ///    `a - f - 2` free children (ascending id) join `D`, `b -= a - 2`.
    ///
    /// Demands clamp at zero. Afterwards the cover set of `uw` is `N[w]`; if
    /// the lowered `b` still exceeds `|N[w]|`, the excess can only be met by
    /// further children of `u`, so that many free children join `D` and `b`
    /// drops to `|N[w]|`.
    pub fn process_support_vertex(&mut self, u: Vertex) -> Branch {
        self.process_at(self.tree.position(u))
    }

    fn process_at(&mut self, i: usize) -> Branch {
        let tree = self.tree;
        let Some(w) = tree.parent_position(i) else {
            return Branch::Skipped;
        };
        if !self.nodes[i].alive {
            return Branch::Skipped;
        }
        let children = tree.child_positions(i);
        let mut leaf_count = 0;
        let mut required_leaves = 0u32;
        let mut a = 0;
        for node in &self.nodes[children.clone()] {
            if !node.alive {
                continue;
            }
            debug_assert_eq!(node.live_degree, 1, "a child is not a leaf");
            leaf_count += 1;
            required_leaves += (node.label == Label::Required) as u32;
            a = a.max(node.up_demand);
        }
        if leaf_count == 0 {
            return Branch::Skipped;
        }

        let (nu, nw) = (self.nodes[i], self.nodes[w]);
        let closed_u = nu.live_degree + 1;
        let cover_uw = nu.live_degree + nw.live_degree;
        let b = nu.up_demand;
        let required_around =
            required_leaves + (nu.label == Label::Required) as u32 + (nw.label == Label::Required) as u32;

        if a > closed_u || b > cover_uw {
            self.infeasible = true;
            return Branch::Infeasible;
        }

        let (branch, new_b, free_quota) = if a == closed_u || b == cover_uw {
            (Branch::Saturated, b.saturating_sub(leaf_count), usize::MAX)
        } else if a <= required_around {
            (Branch::Covered, b.saturating_sub(required_leaves), 0)
        } else if a - required_leaves == 1 {
            (Branch::PromoteParent, b.saturating_sub(required_leaves), 0)
        } else {
            let quota = (a - required_leaves - 2) as usize;
            (Branch::PromoteBoth, (b + 2).saturating_sub(a), quota)
        };

        match branch {
            Branch::Saturated | Branch::PromoteBoth => {
                self.nodes[i].label = Label::Required;
                self.nodes[w].label = Label::Required;
            }
            Branch::PromoteParent => self.nodes[w].label = Label::Required,
            _ => {}
        }

        // Free children are committed in ascending id order, which is
        // descending position: first the branch quota, then any top-up for
        // the parent edge.
        let closed_w = nw.live_degree + 1;
        let top_up = new_b.saturating_sub(closed_w) as usize;
        debug_assert!(branch != Branch::Saturated || top_up == 0);
        let mut take = free_quota.saturating_add(top_up);
        self.topped_up += top_up;

        for node in self.nodes[children].iter_mut().rev() {
            if !node.alive {
                continue;
            }
            let required = node.label == Label::Required;
            node.in_set = required || take > 0;
            if !required && take > 0 {
                take -= 1;
            }
            node.alive = false;
        }
        debug_assert!(free_quota == usize::MAX || take == 0, "not enough free leaves");
        let node = &mut self.nodes[i];
        node.live_degree -= leaf_count;
        node.up_demand = new_b.min(closed_w);
        branch
    }

    /// Completes the solution on what is left once every non-root vertex has
    /// been processed: the root alone or a star centered at the root.
    ///
    /// Every residual edge has the whole residual vertex set as its cover set,
    /// so the residual needs `max s(e)` chosen vertices, required ones
    /// included. Missing vertices are taken from the center first, then the
    /// free leaves in ascending id order.
    pub fn finalize_residual(&mut self) -> Outcome<VertexSet> {
        if self.infeasible {
            return Outcome::Infeasible;
        }
        let tree = self.tree;
        let root = tree.position(tree.root());
        let leaves: Vec<usize> = tree
            .child_positions(root)
            .rev()
            .filter(|&j| self.nodes[j].alive)
            .collect();
        debug_assert_eq!(
            self.nodes.iter().filter(|n| n.alive).count(),
            leaves.len() + 1,
            "residual is not a star at the root"
        );

        let need = leaves
            .iter()
            .map(|&j| self.nodes[j].up_demand as usize)
            .max()
            .unwrap_or(0);
        if need > leaves.len() + 1 {
            self.infeasible = true;
            return Outcome::Infeasible;
        }
        let residual = core::iter::once(root).chain(leaves.iter().copied());
        let mut have = 0;
        for j in residual.clone() {
            if self.nodes[j].label == Label::Required {
                self.nodes[j].in_set = true;
                have += 1;
            }
        }
        for j in residual {
            if have >= need {
                break;
            }
            if !self.nodes[j].in_set {
                self.nodes[j].in_set = true;
                have += 1;
            }
        }
        Outcome::Found(self.chosen())
    }

    /// Runs the whole bottom-up pass and the residual completion.
    pub fn run(mut self) -> Outcome<VertexSet> {
        for i in 0..self.nodes.len() {
            if self.process_at(i) == Branch::Infeasible {
                return Outcome::Infeasible;
            }
        }
        self.finalize_residual()
    }
}

/// Minimum (s,t)-dominating set of a tree.
pub fn solve_st(tree: &RootedTree, labeling: &StLabeling) -> Result<Outcome<VertexSet>, LabelError> {
    Ok(SolverState::new(tree, labeling)?.run())
}

/// Minimum k-vertex-edge dominating set of a tree.
pub fn solve_kve_tree(tree: &RootedTree, k: u32) -> Outcome<VertexSet> {
    SolverState::uniform(tree, k).run()
}
