//! Runs the tree solver on every component of a forest.

use kve_core::tree::{is_forest, tree_center};
use kve_core::tree_solver::{solve_st, LabelError, StLabeling};
use kve_core::{bfs_rooted, Graph, GraphError, Outcome, VertexSet};

/// Solves each component rooted at its center and returns the union, or
/// `Infeasible` as soon as one component is.
pub fn solve_forest(g: &Graph, labeling: &StLabeling) -> Result<Outcome<VertexSet>, LabelError> {
    if !is_forest(g) {
        return Err(GraphError::NotATree("input contains a cycle").into());
    }
    let mut chosen = Vec::new();
    for comp in g.components() {
        let (sub, map) = g.induced(&comp);
        let labels = map.iter().map(|&v| labeling.label(v)).collect();
        let demands = sub
            .edges()
            .iter()
            .map(|&(a, b)| labeling.demands()[g.edge_id(map[a], map[b]).expect("induced edge")])
            .collect();
        let local = StLabeling::new(&sub, labels, demands)?;
        let tree = bfs_rooted(&sub, tree_center(&sub)?)?;
        match solve_st(&tree, &local)? {
            Outcome::Found(d) => chosen.extend(d.iter().map(|&v| map[v])),
            Outcome::Infeasible => return Ok(Outcome::Infeasible),
        }
    }
    Ok(Outcome::Found(VertexSet::from_vec(chosen)))
}
