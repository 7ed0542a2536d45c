//! Exact 3-cover to k-ve domination on chordal graphs.
//!
//! Vertex layout: elements, subsets, padding clique (`k - 2`), hub, tail,
//! guards, shield cliques (`k - 1` per element, element-major), anchors,
//! leaves.

use alloc::vec;
use alloc::vec::Vec;

use super::{ClaimError, GadgetGraph, InstanceError, Provenance, Role};
use crate::exact::exact_kve;
use crate::graph::Graph;

/// Universe `0..3q` and a collection of 3-element subsets of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ex3CInstance {
    q: usize,
    subsets: Vec<[usize; 3]>,
}

impl Ex3CInstance {
    pub fn new(q: usize, subsets: Vec<Vec<usize>>) -> Result<Self, InstanceError> {
        let universe = 3 * q;
        let mut checked = Vec::with_capacity(subsets.len());
        for (index, s) in subsets.into_iter().enumerate() {
            let triple: [usize; 3] = s
                .as_slice()
                .try_into()
                .map_err(|_| InstanceError::NotATriple { index, len: s.len() })?;
            for (i, &element) in triple.iter().enumerate() {
                if element >= universe {
                    return Err(InstanceError::ElementOutOfRange {
                        index,
                        element,
                        universe,
                    });
                }
                if triple[..i].contains(&element) {
                    return Err(InstanceError::DuplicateMember { index, element });
                }
            }
            checked.push(triple);
        }
        Ok(Ex3CInstance { q, subsets: checked })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn universe(&self) -> usize {
        3 * self.q
    }

    pub fn subsets(&self) -> &[[usize; 3]] {
        &self.subsets
    }

    /// Number of subsets in the collection.
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }
}

/// Indices of `q` pairwise disjoint subsets covering the universe, if any.
pub fn exact_cover(inst: &Ex3CInstance) -> Option<Vec<usize>> {
    fn search(inst: &Ex3CInstance, covered: &mut [bool], picked: &mut Vec<usize>) -> bool {
        let Some(first) = covered.iter().position(|&c| !c) else {
            return true;
        };
        for (j, s) in inst.subsets.iter().enumerate() {
            if !s.contains(&first) || s.iter().any(|&x| covered[x]) {
                continue;
            }
            s.iter().for_each(|&x| covered[x] = true);
            picked.push(j);
            if search(inst, covered, picked) {
                return true;
            }
            picked.pop();
            s.iter().for_each(|&x| covered[x] = false);
        }
        false
    }
    let mut covered = vec![false; inst.universe()];
    let mut picked = Vec::new();
    search(inst, &mut covered, &mut picked).then_some(picked)
}

/// Builds the chordal gadget for `inst` and `k >= 2`.
///
/// Subsets form a clique, joined completely to a padding clique of `k - 2`
/// vertices; element `i` is adjacent to subset `j` when `i` belongs to it.
/// The hub is joined to the padding clique and carries the pendant tail.
/// Element `i` has a guard, the guard is joined to a shield clique of
/// `k - 1` vertices, and the shields are joined to an anchor with a pendant
/// leaf. With `k = 2` the padding clique is empty and hub and tail form a
/// separate component.
pub fn build_ex3c_gadget(inst: &Ex3CInstance, k: usize) -> Result<GadgetGraph, InstanceError> {
    if k < 2 {
        return Err(InstanceError::DemandTooSmall { k, min: 2 });
    }
    let q3 = inst.universe();
    let m = inst.len();
    let pads = k - 2;
    let shields = k - 1;

    let mut roles = Vec::new();
    roles.extend((0..q3).map(Role::Element));
    roles.extend((0..m).map(Role::Subset));
    roles.extend((0..pads).map(Role::Pad));
    roles.push(Role::Hub);
    roles.push(Role::Tail);
    roles.extend((0..q3).map(Role::Guard));
    roles.extend((0..q3).flat_map(|i| (0..shields).map(move |j| Role::Shield(i, j))));
    roles.extend((0..q3).map(Role::Anchor));
    roles.extend((0..q3).map(Role::Leaf));

    let element = |i: usize| i;
    let subset = |j: usize| q3 + j;
    let pad = |i: usize| q3 + m + i;
    let hub = q3 + m + pads;
    let tail = hub + 1;
    let guard = |i: usize| tail + 1 + i;
    let shield = |i: usize, j: usize| tail + 1 + q3 + i * shields + j;
    let anchor = |i: usize| tail + 1 + q3 + q3 * shields + i;
    let leaf = |i: usize| anchor(i) + q3;

    let mut edges = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            edges.push((subset(a), subset(b)));
        }
    }
    for (j, s) in inst.subsets().iter().enumerate() {
        for &i in s {
            edges.push((element(i), subset(j)));
        }
    }
    for a in 0..pads {
        for b in a + 1..pads {
            edges.push((pad(a), pad(b)));
        }
        for j in 0..m {
            edges.push((pad(a), subset(j)));
        }
    }
    edges.push((hub, tail));
    for a in 0..pads {
        edges.push((hub, pad(a)));
    }
    for i in 0..q3 {
        edges.push((element(i), guard(i)));
        for a in 0..shields {
            for b in a + 1..shields {
                edges.push((shield(i, a), shield(i, b)));
            }
            edges.push((guard(i), shield(i, a)));
        }
        edges.push((anchor(i), leaf(i)));
        for a in 0..shields {
            edges.push((anchor(i), shield(i, a)));
        }
    }

    let graph = Graph::from_edges(roles.len(), edges).expect("gadget construction is simple");
    Ok(GadgetGraph {
        graph,
        roles,
        provenance: Provenance::ExactCover {
            instance: inst.clone(),
            k,
        },
    })
}

/// Both sides of the exact 3-cover equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ex3CClaim {
    pub cover_exists: bool,
    /// k-ve domination number of the gadget.
    pub optimum: usize,
    /// `k + q + 3qk`.
    pub threshold: usize,
}

impl Ex3CClaim {
    pub fn holds(&self) -> bool {
        self.cover_exists == (self.optimum <= self.threshold)
    }
}

/// Computes whether an exact cover exists and the exact k-ve domination
/// number of the gadget.
pub fn ex3c_claim(inst: &Ex3CInstance, k: usize, budget: Option<u64>) -> Result<Ex3CClaim, ClaimError> {
    let gadget = build_ex3c_gadget(inst, k)?;
    let cover_exists = exact_cover(inst).is_some();
    let optimum = exact_kve(&gadget.graph, k, budget)?
        .optimum
        .expect("every gadget edge has a cover set of at least k vertices");
    Ok(Ex3CClaim {
        cover_exists,
        optimum,
        threshold: k + inst.q() + 3 * inst.q() * k,
    })
}

/// Whether an exact cover exists exactly when the gadget has a k-ve
/// dominating set of at most `k + q + 3qk` vertices.
pub fn check_ex3c_claim(inst: &Ex3CInstance, k: usize, budget: Option<u64>) -> Result<bool, ClaimError> {
    Ok(ex3c_claim(inst, k, budget)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;
    use alloc::vec;

    fn single() -> Ex3CInstance {
        Ex3CInstance::new(1, vec![vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            Ex3CInstance::new(1, vec![vec![0, 1]]),
            Err(InstanceError::NotATriple { index: 0, len: 2 })
        );
        assert_eq!(
            Ex3CInstance::new(1, vec![vec![0, 0, 1]]),
            Err(InstanceError::DuplicateMember { index: 0, element: 0 })
        );
        assert_eq!(
            Ex3CInstance::new(1, vec![vec![0, 1, 3]]),
            Err(InstanceError::ElementOutOfRange {
                index: 0,
                element: 3,
                universe: 3
            })
        );
        assert_eq!(
            build_ex3c_gadget(&single(), 1),
            Err(InstanceError::DemandTooSmall { k: 1, min: 2 })
        );
    }

    #[test]
    fn sizes() {
        let g = build_ex3c_gadget(&single(), 3).unwrap();
        assert_eq!(g.graph.n(), 22);
        assert!(is_chordal(&g.graph));
        g.audit().unwrap();

        let g2 = build_ex3c_gadget(&single(), 2).unwrap();
        assert_eq!(g2.graph.n(), 18);
        assert!(g2.vertices_where(|r| matches!(r, Role::Pad(_))).is_empty());
        let hub = g2.vertices_where(|r| r == Role::Hub)[0];
        assert_eq!(g2.graph.neighbors(hub).len(), 1);
        assert_eq!(g2.graph.components().len(), 2);
        g2.audit().unwrap();
    }

    #[test]
    fn role_counts() {
        let inst = Ex3CInstance::new(2, vec![vec![0, 1, 2], vec![3, 4, 5], vec![1, 3, 5]]).unwrap();
        let g = build_ex3c_gadget(&inst, 4).unwrap();
        let count = |pred: fn(Role) -> bool| g.vertices_where(pred).len();
        assert_eq!(count(|r| matches!(r, Role::Element(_))), 6);
        assert_eq!(count(|r| matches!(r, Role::Guard(_))), 6);
        assert_eq!(count(|r| matches!(r, Role::Subset(_))), 3);
        assert_eq!(count(|r| matches!(r, Role::Pad(_))), 2);
        assert_eq!(count(|r| matches!(r, Role::Shield(..))), 18);
        g.audit().unwrap();
    }

    #[test]
    fn audit_catches_tampering() {
        let mut g = build_ex3c_gadget(&single(), 3).unwrap();
        let mut edges = g.graph.edges().to_vec();
        // Join an element to its anchor: no rule explains it.
        edges.push((0, g.vertices_where(|r| r == Role::Anchor(0))[0]));
        g.graph = Graph::from_edges(g.graph.n(), edges).unwrap();
        assert!(g.audit().is_err());
    }

    #[test]
    fn exact_cover_search() {
        let yes = Ex3CInstance::new(2, vec![vec![0, 1, 3], vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(exact_cover(&yes), Some(vec![1, 2]));
        let no = Ex3CInstance::new(2, vec![vec![0, 1, 2], vec![2, 3, 4], vec![1, 4, 5]]).unwrap();
        assert_eq!(exact_cover(&no), None);
        assert_eq!(exact_cover(&Ex3CInstance::new(0, vec![]).unwrap()), Some(vec![]));
    }

    #[test]
    fn claim_values_from_oracle() {
        // A single subset leaves the subset-element edges one vertex short of k,
        // so the optimum overshoots the threshold by one.
        let c = ex3c_claim(&single(), 2, None).unwrap();
        assert_eq!((c.cover_exists, c.optimum, c.threshold), (true, 10, 9));
        assert!(!c.holds());

        let yes = Ex3CInstance::new(2, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let c = ex3c_claim(&yes, 3, None).unwrap();
        assert_eq!((c.cover_exists, c.optimum, c.threshold), (true, 23, 23));
        let no = Ex3CInstance::new(2, vec![vec![0, 1, 2], vec![2, 3, 4], vec![1, 4, 5]]).unwrap();
        let c = ex3c_claim(&no, 2, None).unwrap();
        assert_eq!((c.cover_exists, c.optimum, c.threshold), (false, 17, 16));
        assert!(check_ex3c_claim(&no, 3, None).unwrap());
    }
}
