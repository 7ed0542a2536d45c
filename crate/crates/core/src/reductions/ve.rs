//! Vertex-edge domination to k-ve domination.

use alloc::vec::Vec;

use super::{ClaimError, GadgetGraph, InstanceError, Provenance, Role};
use crate::exact::{exact_kve, OracleResult};
use crate::graph::Graph;

/// Adds a clique of `k - 1` vertices joined to every vertex of `g`, a hub
/// joined to the clique and a tail hanging off the hub. Original vertices keep
/// their ids, the clique follows, then hub and tail.
pub fn build_ve_to_kve(g: &Graph, k: usize) -> Result<GadgetGraph, InstanceError> {
    if k < 2 {
        return Err(InstanceError::DemandTooSmall { k, min: 2 });
    }
    let n = g.n();
    let clique = |j: usize| n + j;
    let hub = n + k - 1;
    let tail = hub + 1;

    let mut roles: Vec<Role> = (0..n).map(Role::Original).collect();
    roles.extend((0..k - 1).map(Role::Clique));
    roles.push(Role::Hub);
    roles.push(Role::Tail);

    let mut edges = g.edges().to_vec();
    for j in 0..k - 1 {
        edges.extend((0..n).map(|v| (v, clique(j))));
    }
    for a in 0..k - 1 {
        for b in a + 1..k - 1 {
            edges.push((clique(a), clique(b)));
        }
        edges.push((clique(a), hub));
    }
    edges.push((hub, tail));

    let graph = Graph::from_edges(roles.len(), edges).expect("gadget construction is simple");
    Ok(GadgetGraph {
        graph,
        roles,
        provenance: Provenance::VeToKve {
            source_n: n,
            source_m: g.m(),
            k,
        },
    })
}

/// Optima on both sides of the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeClaim {
    pub source: OracleResult,
    pub gadget: OracleResult,
    pub k: usize,
}

impl VeClaim {
    /// `γ_kve(G') = γ_ve(G) + k`.
    pub fn holds(&self) -> bool {
        match (self.source.optimum, self.gadget.optimum) {
            (Some(a), Some(b)) => b == a + self.k,
            _ => false,
        }
    }
}

pub fn ve_to_kve_claim(g: &Graph, k: usize, budget: Option<u64>) -> Result<VeClaim, ClaimError> {
    let gadget = build_ve_to_kve(g, k)?;
    Ok(VeClaim {
        source: exact_kve(g, 1, budget)?,
        gadget: exact_kve(&gadget.graph, k, budget)?,
        k,
    })
}

pub fn check_ve_to_kve_claim(g: &Graph, k: usize, budget: Option<u64>) -> Result<bool, ClaimError> {
    Ok(ve_to_kve_claim(g, k, budget)?.holds())
}
