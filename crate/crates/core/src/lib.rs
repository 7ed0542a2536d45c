//! Solvers for minimum k-vertex-edge domination.
//!
//! A set `D` k-vertex-edge dominates a graph when every edge `uv` has at least
//! `k` members of `D` inside `N[u] ∪ N[v]`. This crate provides:
//!
//! * [`graph`]: the simple undirected [`Graph`] and neighborhood primitives,
//! * [`domination`]: verification and feasibility checks,
//! * [`tree_solver`]: an exact linear-time solver for trees,
//! * [`greedy`]: a logarithmic-ratio approximation through set multicover,
//! * [`exact`]: branch-and-bound exact optima for small graphs,
//! * [`reductions`]: gadget constructions relating the problem to exact
//!   3-cover, plain vertex-edge domination and k-tuple domination.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod chordal;
pub mod domination;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod reductions;
pub mod tree;
pub mod tree_solver;

pub use domination::{feasible, first_violation, verify_kve};
pub use graph::{Graph, GraphError, Vertex, VertexSet};
pub use tree::{bfs_rooted, RootedTree, MAX_TREE_VERTICES};

/// Result of a solver that can prove that no solution exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    Infeasible,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(x) => Some(x),
            Outcome::Infeasible => None,
        }
    }

    pub fn as_found(&self) -> Option<&T> {
        match self {
            Outcome::Found(x) => Some(x),
            Outcome::Infeasible => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Outcome::Infeasible)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(x) => Outcome::Found(f(x)),
            Outcome::Infeasible => Outcome::Infeasible,
        }
    }
}
