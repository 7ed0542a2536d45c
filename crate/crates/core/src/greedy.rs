//! Approximation through set multicover.
//!
//! Edges become universe elements and each vertex `v` becomes the family of
//! edges touching `N[v]`, i.e. the edges whose cover set contains `v`. A
//! k-multicover of that instance is exactly a k-vertex-edge dominating set,
//! and the greedy multicover is within `ln(max |F_v|) + 1` of optimal, with
//! `max |F_v| <= Δ²`.

use alloc::collections::BinaryHeap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt::Write;

use crate::graph::{Graph, VertexSet};
use crate::Outcome;

/// Universe `0..universe_size`, a list of families and a uniform demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulticoverInstance {
    pub universe_size: usize,
    pub families: Vec<Vec<usize>>,
    pub demand: usize,
}

impl MulticoverInstance {
    pub fn max_family_size(&self) -> usize {
        self.families.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// One line per family: `F<i>: <elements>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, fam) in self.families.iter().enumerate() {
            let _ = write!(out, "F{i}:");
            for e in fam {
                let _ = write!(out, " {e}");
            }
            out.push('\n');
        }
        out
    }
}

/// Element `e` is the edge with id `e` in `g`; family `v` holds the edges
/// with an endpoint in `N[v]`, sorted.
pub fn build_cover_instance(g: &Graph, k: usize) -> MulticoverInstance {
    let families = g
        .vertices()
        .map(|v| {
            let mut fam: Vec<usize> = g
                .closed_iter(v)
                .flat_map(|x| g.incident_edges(x).iter().copied())
                .collect();
            fam.sort_unstable();
            fam.dedup();
            fam
        })
        .collect();
    MulticoverInstance {
        universe_size: g.m(),
        families,
        demand: k,
    }
}

/// Greedy k-multicover: repeatedly takes the unchosen family covering the
/// most elements that still need coverage, lowest index on ties. Returns the
/// chosen indices in selection order.
pub fn greedy_multicover(inst: &MulticoverInstance) -> Outcome<Vec<usize>> {
    let k = inst.demand;
    let mut containing = vec![Vec::new(); inst.universe_size];
    for (i, fam) in inst.families.iter().enumerate() {
        for &e in fam {
            containing[e].push(i);
        }
    }
    if containing.iter().any(|sets| sets.len() < k) {
        return Outcome::Infeasible;
    }
    let mut residual = vec![k; inst.universe_size];
    let mut outstanding = if k == 0 { 0 } else { inst.universe_size };

    // Scores only decrease, so a stale heap entry is refreshed on pop.
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = inst
        .families
        .iter()
        .enumerate()
        .map(|(i, fam)| (fam.len(), Reverse(i)))
        .collect();
    let mut chosen = Vec::new();
    let mut taken = vec![false; inst.families.len()];

    while outstanding > 0 {
        let (cached, Reverse(i)) = heap.pop().expect("a feasible instance never runs out of families");
        if taken[i] {
            continue;
        }
        let score = inst.families[i].iter().filter(|&&e| residual[e] > 0).count();
        if score < cached {
            heap.push((score, Reverse(i)));
            continue;
        }
        debug_assert!(score > 0);
        taken[i] = true;
        chosen.push(i);
        for &e in &inst.families[i] {
            if residual[e] > 0 {
                residual[e] -= 1;
                if residual[e] == 0 {
                    outstanding -= 1;
                }
            }
        }
    }
    Outcome::Found(chosen)
}

/// Greedy k-vertex-edge dominating set.
pub fn approx_kve(g: &Graph, k: usize) -> Outcome<VertexSet> {
    greedy_multicover(&build_cover_instance(g, k)).map(VertexSet::from_vec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::verify_kve;

    #[test]
    fn instance_of_k2() {
        let inst = build_cover_instance(&Graph::path(2), 1);
        assert_eq!(inst.universe_size, 1);
        assert_eq!(inst.families, vec![vec![0], vec![0]]);
    }

    #[test]
    fn instance_of_p3() {
        let inst = build_cover_instance(&Graph::path(3), 1);
        assert_eq!(inst.families, vec![vec![0, 1]; 3]);
        assert_eq!(inst.dump(), "F0: 0 1\nF1: 0 1\nF2: 0 1\n");
    }

    #[test]
    fn instance_of_star() {
        let inst = build_cover_instance(&Graph::star(3), 1);
        assert_eq!(inst.families, vec![vec![0, 1, 2]; 4]);
    }

    #[test]
    fn multicover_examples() {
        let both = MulticoverInstance {
            universe_size: 1,
            families: vec![vec![0], vec![0]],
            demand: 2,
        };
        assert_eq!(greedy_multicover(&both), Outcome::Found(vec![0, 1]));
        let one = MulticoverInstance {
            universe_size: 2,
            families: vec![vec![0, 1], vec![0], vec![1]],
            demand: 1,
        };
        assert_eq!(greedy_multicover(&one), Outcome::Found(vec![0]));
        let short = MulticoverInstance {
            universe_size: 1,
            families: vec![vec![0]],
            demand: 2,
        };
        assert_eq!(greedy_multicover(&short), Outcome::Infeasible);
    }

    #[test]
    fn prefers_larger_residual_coverage() {
        // Family 2 covers three fresh elements; after it, 0 and 1 tie.
        let inst = MulticoverInstance {
            universe_size: 4,
            families: vec![vec![0, 3], vec![1, 3], vec![0, 1, 2]],
            demand: 1,
        };
        assert_eq!(greedy_multicover(&inst), Outcome::Found(vec![2, 0]));
    }

    #[test]
    fn approx_examples() {
        assert_eq!(
            approx_kve(&Graph::star(5), 1),
            Outcome::Found(VertexSet::from_vec(vec![0]))
        );
        assert_eq!(
            approx_kve(&Graph::path(5), 1),
            Outcome::Found(VertexSet::from_vec(vec![2]))
        );
        assert_eq!(approx_kve(&Graph::path(2), 3), Outcome::Infeasible);
        let c6 = Graph::cycle(6);
        let d = approx_kve(&c6, 2).found().unwrap();
        assert!(verify_kve(&c6, &d, 2).unwrap());
    }
}
