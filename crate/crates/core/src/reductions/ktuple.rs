//! k-tuple domination to k-ve domination with one pendant per vertex.

use alloc::vec::Vec;

use super::{ClaimError, GadgetGraph, Provenance, Role};
use crate::exact::{exact_ktuple, exact_kve, OracleResult};
use crate::graph::Graph;

/// Attaches pendant `n + i` to every vertex `i`.
pub fn build_ktuple_to_kve(g: &Graph) -> GadgetGraph {
    let n = g.n();
    let mut roles: Vec<Role> = (0..n).map(Role::Original).collect();
    roles.extend((0..n).map(Role::Pendant));
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|i| (i, n + i)));
    GadgetGraph {
        graph: Graph::from_edges(2 * n, edges).expect("gadget construction is simple"),
        roles,
        provenance: Provenance::KtupleToKve {
            source_n: n,
            source_m: g.m(),
            source_max_degree: g.max_degree(),
        },
    }
}

/// k-tuple optimum of the source and k-ve optimum of the gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KtupleClaim {
    pub source: OracleResult,
    pub gadget: OracleResult,
}

impl KtupleClaim {
    /// Equal optima, with infeasibility counted as a value.
    pub fn holds(&self) -> bool {
        self.source.optimum == self.gadget.optimum
    }
}

pub fn ktuple_claim(g: &Graph, k: usize, budget: Option<u64>) -> Result<KtupleClaim, ClaimError> {
    let gadget = build_ktuple_to_kve(g);
    Ok(KtupleClaim {
        source: exact_ktuple(g, k, budget)?,
        gadget: exact_kve(&gadget.graph, k, budget)?,
    })
}

pub fn check_ktuple_claim(g: &Graph, k: usize, budget: Option<u64>) -> Result<bool, ClaimError> {
    Ok(ktuple_claim(g, k, budget)?.holds())
}
