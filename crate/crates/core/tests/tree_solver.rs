mod common;

use common::{brute_kve, brute_st};
use kve_core::exact::exact_st;
use kve_core::generate::gen_random_tree;
use kve_core::tree_solver::{solve_kve_tree, solve_st, verify_st, Label, SolverState, StLabeling};
use kve_core::{bfs_rooted, feasible, verify_kve, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn matches_brute_force_on_random_trees() {
    for seed in 0..300 {
        let n = 1 + (seed as usize % 10);
        let g = gen_random_tree(n, seed);
        for k in 1..=3 {
            let expected = brute_kve(&g, k);
            assert_eq!(expected.is_some(), feasible(&g, k));
            for root in g.vertices() {
                let tree = bfs_rooted(&g, root).unwrap();
                let got = solve_kve_tree(&tree, k as u32).found();
                assert_eq!(got.as_ref().map(|d| d.len()), expected, "seed {seed} root {root} k {k}");
                if let Some(d) = got {
                    assert!(verify_kve(&g, &d, k).unwrap());
                }
            }
        }
    }
}

fn random_labeling(g: &Graph, rng: &mut ChaCha8Rng) -> StLabeling {
    let labels = g
        .vertices()
        .map(|_| {
            if rng.gen_bool(0.2) {
                Label::Required
            } else {
                Label::Free
            }
        })
        .collect();
    let demands = (0..g.m()).map(|_| rng.gen_range(0..=4)).collect();
    StLabeling::new(g, labels, demands).unwrap()
}

#[test]
fn st_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1500 {
        let n = rng.gen_range(1..=9);
        let g = gen_random_tree(n, rng.gen());
        let lab = random_labeling(&g, &mut rng);
        let root = rng.gen_range(0..n);
        let tree = bfs_rooted(&g, root).unwrap();
        let got = solve_st(&tree, &lab).unwrap().found();
        let expected = brute_st(&g, &lab);
        assert_eq!(got.as_ref().map(|d| d.len()), expected, "{g:?} root {root} {lab:?}");
        assert_eq!(exact_st(&g, &lab, None).unwrap().optimum, expected);
        if let Some(d) = got {
            assert!(verify_st(&g, &lab, &d).unwrap());
        }
    }
}

#[test]
fn large_parent_demand_needs_top_up() {
    // Support vertex 1 with three leaves of demand 2 and s(1, 0) = 4; vertex 0
    // hangs off 5. Without topping up the parent edge the run would report
    // infeasible.
    let g = Graph::from_edges(6, [(1, 2), (1, 3), (1, 4), (0, 1), (0, 5)]).unwrap();
    let mut lab = StLabeling::uniform(&g, 2);
    lab.set_demand(&g, 0, 1, 4).unwrap();
    let tree = bfs_rooted(&g, 5).unwrap();
    let mut state = SolverState::new(&tree, &lab).unwrap();
    state.process_support_vertex(1);
    assert!(state.topped_up() > 0);
    let d = solve_st(&tree, &lab).unwrap().found().unwrap();
    assert!(verify_st(&g, &lab, &d).unwrap());
    assert_eq!(Some(d.len()), brute_st(&g, &lab));
}

proptest! {
    #[test]
    fn cardinality_is_root_invariant(n in 1usize..40, seed: u64, k in 1u32..4) {
        let g = gen_random_tree(n, seed);
        let sizes: Vec<_> = g
            .vertices()
            .map(|r| solve_kve_tree(&bfs_rooted(&g, r).unwrap(), k).found().map(|d| d.len()))
            .collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn demand_monotone(n in 1usize..40, seed: u64, k in 1u32..4) {
        let g = gen_random_tree(n, seed);
        let tree = bfs_rooted(&g, 0).unwrap();
        let lo = solve_kve_tree(&tree, k).found().map(|d| d.len());
        let hi = solve_kve_tree(&tree, k + 1).found().map(|d| d.len());
        match (lo, hi) {
            (Some(a), Some(b)) => prop_assert!(a <= b),
            (None, Some(_)) => prop_assert!(false, "k+1 feasible but k not"),
            _ => {}
        }
    }

    #[test]
    fn output_verifies(n in 1usize..200, seed: u64, k in 1u32..4) {
        let g = gen_random_tree(n, seed);
        let tree = bfs_rooted(&g, seed as usize % n).unwrap();
        match solve_kve_tree(&tree, k).found() {
            Some(d) => prop_assert!(verify_kve(&g, &d, k as usize).unwrap()),
            None => prop_assert!(!feasible(&g, k as usize)),
        }
    }
}
