//! Exact optima by branch and bound, for small graphs.
//!
//! Every problem here is a multicover: a list of requirements, each asking for
//! at least `demand` chosen vertices among its candidates, plus vertices that
//! are chosen unconditionally. The search deepens the allowed cardinality one
//! step at a time starting from a lower bound, so the first solution found is
//! optimal. Within one depth it branches on including or excluding a vertex
//! of the tightest unmet requirement and prunes with
//!
//! * requirements that can no longer be met by the undecided vertices,
//! * a packing bound: requirements with pairwise disjoint undecided
//!   candidates need the sum of their residual demands,
//! * dominance: if every requirement containing `x` also contains `y`, some
//!   optimum never takes `x` without `y`, so excluding `y` excludes `x`.
//!
//! A node budget caps the work; running out is reported as an error and
//! never as an answer.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::tree_solver::{Label, LabelError, StLabeling};

/// Search nodes allowed when the caller does not pass a budget.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },
    #[error(transparent)]
    Label(#[from] LabelError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Minimum cardinality, `None` when no solution exists.
    pub optimum: Option<usize>,
    pub witness: Option<VertexSet>,
    /// Search nodes visited over all deepening rounds.
    pub explored: u64,
}

impl OracleResult {
    pub fn is_feasible(&self) -> bool {
        self.optimum.is_some()
    }
}

/// "At least `demand` of `candidates`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Requirement {
    pub demand: usize,
    pub candidates: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverProblem {
    n: usize,
    requirements: Vec<Requirement>,
    forced: Vec<bool>,
}

impl CoverProblem {
    pub fn new(n: usize, requirements: Vec<Requirement>, forced: Vec<Vertex>) -> Self {
        let mut mask = vec![false; n];
        for v in forced {
            mask[v] = true;
        }
        CoverProblem {
            n,
            requirements,
            forced: mask,
        }
    }

    /// One requirement per edge: `k` vertices of `N[u] ∪ N[v]`.
    pub fn kve(g: &Graph, k: usize) -> Self {
        let requirements = g
            .edges()
            .iter()
            .map(|&(u, v)| Requirement {
                demand: k,
                candidates: g.cover_iter(u, v).collect(),
            })
            .collect();
        CoverProblem::new(g.n(), requirements, Vec::new())
    }

    /// One requirement per vertex: `k` vertices of `N[v]`.
    pub fn ktuple(g: &Graph, k: usize) -> Self {
        let requirements = g
            .vertices()
            .map(|v| Requirement {
                demand: k,
                candidates: g.closed_iter(v).collect(),
            })
            .collect();
        CoverProblem::new(g.n(), requirements, Vec::new())
    }

    /// Per-edge demands with required vertices forced in.
    pub fn st(g: &Graph, labeling: &StLabeling) -> Result<Self, LabelError> {
        let labeling = StLabeling::new(g, labeling.labels().to_vec(), labeling.demands().to_vec())?;
        let requirements = g
            .edges()
            .iter()
            .zip(labeling.demands())
            .map(|(&(u, v), &s)| Requirement {
                demand: s as usize,
                candidates: g.cover_iter(u, v).collect(),
            })
            .collect();
        let forced = g.vertices().filter(|&v| labeling.label(v) == Label::Required).collect();
        Ok(CoverProblem::new(g.n(), requirements, forced))
    }

    /// Minimum solution.
    pub fn solve(&self, budget: Option<u64>) -> Result<OracleResult, OracleError> {
        let mut search = Search::new(self, budget.unwrap_or(DEFAULT_BUDGET));
        if !search.root_feasible() {
            return Ok(OracleResult {
                optimum: None,
                witness: None,
                explored: 0,
            });
        }
        let start = search.forced_count + search.lower_bound();
        for target in start..=self.n {
            if search.dfs(target)? {
                let witness = search.witness();
                return Ok(OracleResult {
                    optimum: Some(witness.len()),
                    witness: Some(witness),
                    explored: search.explored,
                });
            }
        }
        unreachable!("taking every vertex satisfies a root-feasible problem")
    }

    /// A solution of at most `target` vertices, if one exists.
    pub fn decide(&self, target: usize, budget: Option<u64>) -> Result<Option<VertexSet>, OracleError> {
        let mut search = Search::new(self, budget.unwrap_or(DEFAULT_BUDGET));
        if !search.root_feasible() {
            return Ok(None);
        }
        Ok(search.dfs(target)?.then(|| search.witness()))
    }
}

/// Minimum k-vertex-edge dominating set.
pub fn exact_kve(g: &Graph, k: usize, budget: Option<u64>) -> Result<OracleResult, OracleError> {
    CoverProblem::kve(g, k).solve(budget)
}

/// Minimum vertex-edge dominating set (`k = 1`) under the default budget.
pub fn exact_ve(g: &Graph) -> Result<OracleResult, OracleError> {
    exact_kve(g, 1, None)
}

/// Minimum k-tuple dominating set: `|N[v] ∩ D| >= k` for every vertex.
pub fn exact_ktuple(g: &Graph, k: usize, budget: Option<u64>) -> Result<OracleResult, OracleError> {
    CoverProblem::ktuple(g, k).solve(budget)
}

/// Minimum (s,t)-dominating set of an arbitrary graph.
pub fn exact_st(g: &Graph, labeling: &StLabeling, budget: Option<u64>) -> Result<OracleResult, OracleError> {
    CoverProblem::st(g, labeling)?.solve(budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Undecided,
    In,
    Out,
}

struct Search<'p> {
    problem: &'p CoverProblem,
    members: Vec<Vec<usize>>,
    dominated: Vec<Vec<Vertex>>,
    status: Vec<Status>,
    need: Vec<isize>,
    avail: Vec<isize>,
    bound_order: Vec<usize>,
    stamp: Vec<u32>,
    generation: u32,
    trail: Vec<Vertex>,
    chosen: usize,
    forced_count: usize,
    explored: u64,
    budget: u64,
}

impl<'p> Search<'p> {
    fn new(problem: &'p CoverProblem, budget: u64) -> Self {
        let n = problem.n;
        let reqs = &problem.requirements;
        let mut status: Vec<Status> = problem
            .forced
            .iter()
            .map(|&f| if f { Status::In } else { Status::Undecided })
            .collect();
        let forced_count = problem.forced.iter().filter(|&&f| f).count();

        let mut need = Vec::with_capacity(reqs.len());
        let mut avail = Vec::with_capacity(reqs.len());
        let mut members = vec![Vec::new(); n];
        for (e, req) in reqs.iter().enumerate() {
            let have = req.candidates.iter().filter(|&&x| problem.forced[x]).count();
            let residual = req.demand as isize - have as isize;
            need.push(residual);
            avail.push((req.candidates.len() - have) as isize);
            if residual > 0 {
                for &x in &req.candidates {
                    if !problem.forced[x] {
                        members[x].push(e);
                    }
                }
            }
        }

        // A free vertex that serves no unmet requirement is never useful.
        for x in 0..n {
            if status[x] == Status::Undecided && members[x].is_empty() {
                status[x] = Status::Out;
                for (e, req) in reqs.iter().enumerate() {
                    if need[e] <= 0 && req.candidates.contains(&x) {
                        avail[e] -= 1;
                    }
                }
            }
        }

        let dominated = dominance(&members, &status);
        let mut bound_order: Vec<usize> = (0..reqs.len()).collect();
        bound_order.sort_by_key(|&e| (reqs[e].candidates.len(), e));

        Search {
            problem,
            members,
            dominated,
            status,
            need,
            avail,
            bound_order,
            stamp: vec![0; n],
            generation: 0,
            trail: Vec::new(),
            chosen: 0,
            forced_count,
            explored: 0,
            budget,
        }
    }

    fn root_feasible(&self) -> bool {
        self.need.iter().zip(&self.avail).all(|(&need, &avail)| avail >= need)
    }

    fn witness(&self) -> VertexSet {
        (0..self.problem.n).filter(|&x| self.status[x] == Status::In).collect()
    }

    fn lower_bound(&mut self) -> usize {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
        let generation = self.generation;
        let (mut packed, mut largest) = (0usize, 0usize);
        for &e in &self.bound_order {
            if self.need[e] <= 0 {
                continue;
            }
            let need = self.need[e] as usize;
            largest = largest.max(need);
            let cands = &self.problem.requirements[e].candidates;
            let clash = cands
                .iter()
                .any(|&x| self.status[x] == Status::Undecided && self.stamp[x] == generation);
            if clash {
                continue;
            }
            for &x in cands {
                if self.status[x] == Status::Undecided {
                    self.stamp[x] = generation;
                }
            }
            packed += need;
        }
        packed.max(largest)
    }

    fn include(&mut self, x: Vertex) {
        self.status[x] = Status::In;
        self.trail.push(x);
        self.chosen += 1;
        for &e in &self.members[x] {
            self.need[e] -= 1;
            self.avail[e] -= 1;
        }
    }

    /// Excludes `x` and everything it dominates. False when that makes a
    /// requirement unreachable or contradicts an earlier inclusion.
    fn exclude(&mut self, x: Vertex) -> bool {
        let mut stack = vec![x];
        let mut ok = true;
        while let Some(z) = stack.pop() {
            match self.status[z] {
                Status::Out => continue,
                Status::In => return false,
                Status::Undecided => {}
            }
            self.status[z] = Status::Out;
            self.trail.push(z);
            for &e in &self.members[z] {
                self.avail[e] -= 1;
                ok &= self.avail[e] >= self.need[e];
            }
            if !ok {
                return false;
            }
            stack.extend(self.dominated[z].iter().copied());
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let z = self.trail.pop().expect("trail longer than mark");
            let was_in = self.status[z] == Status::In;
            for &e in &self.members[z] {
                self.avail[e] += 1;
                if was_in {
                    self.need[e] += 1;
                }
            }
            if was_in {
                self.chosen -= 1;
            }
            self.status[z] = Status::Undecided;
        }
    }

    fn dfs(&mut self, target: usize) -> Result<bool, OracleError> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(OracleError::BudgetExceeded { budget: self.budget });
        }
        if self.forced_count + self.chosen > target {
            return Ok(false);
        }

        let mut tightest: Option<(isize, isize, usize)> = None;
        for (e, (&need, &avail)) in self.need.iter().zip(&self.avail).enumerate() {
            if need <= 0 {
                continue;
            }
            let slack = avail - need;
            if slack < 0 {
                return Ok(false);
            }
            let key = (slack, -need, e);
            if tightest.is_none_or(|t| key < t) {
                tightest = Some(key);
            }
        }
        let Some((_, _, e)) = tightest else {
            return Ok(true);
        };
        if self.forced_count + self.chosen + self.lower_bound() > target {
            return Ok(false);
        }

        let x = self.problem.requirements[e]
            .candidates
            .iter()
            .copied()
            .filter(|&x| self.status[x] == Status::Undecided)
            .max_by_key(|&x| {
                let useful = self.members[x].iter().filter(|&&f| self.need[f] > 0).count();
                (useful, core::cmp::Reverse(x))
            })
            .expect("a requirement with slack has an undecided candidate");

        let mark = self.trail.len();
        self.include(x);
        if self.dfs(target)? {
            return Ok(true);
        }
        self.undo(mark);
        if self.exclude(x) && self.dfs(target)? {
            return Ok(true);
        }
        self.undo(mark);
        Ok(false)
    }
}

/// For each vertex `y`, the free vertices `x` whose requirement set is
/// contained in that of `y` (strictly, or equal with `y < x`).
fn dominance(members: &[Vec<usize>], status: &[Status]) -> Vec<Vec<Vertex>> {
    let n = members.len();
    let width = members.iter().flatten().max().map_or(0, |&e| e / 64 + 1);
    let bits: Vec<Vec<u64>> = members
        .iter()
        .map(|m| {
            let mut row = vec![0u64; width];
            for &e in m {
                row[e / 64] |= 1 << (e % 64);
            }
            row
        })
        .collect();
    let mut dominated = vec![Vec::new(); n];
    let live: Vec<Vertex> = (0..n).filter(|&x| status[x] == Status::Undecided).collect();
    for &x in &live {
        for &y in &live {
            if x == y {
                continue;
            }
            let subset = bits[x].iter().zip(&bits[y]).all(|(a, b)| a & !b == 0);
            if subset && (members[x].len() < members[y].len() || y < x) {
                dominated[y].push(x);
            }
        }
    }
    dominated
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{verify_ktuple, verify_kve};

    #[test]
    fn kve_examples() {
        let p5 = Graph::path(5);
        assert_eq!(exact_kve(&p5, 1, None).unwrap().optimum, Some(1));
        assert_eq!(exact_kve(&p5, 2, None).unwrap().optimum, Some(3));
        let k2 = Graph::path(2);
        assert_eq!(exact_kve(&k2, 2, None).unwrap().optimum, Some(2));
        let none = exact_kve(&k2, 3, None).unwrap();
        assert_eq!(none.optimum, None);
        assert_eq!(none.witness, None);
    }

    #[test]
    fn ve_examples() {
        assert_eq!(exact_ve(&Graph::path(5)).unwrap().optimum, Some(1));
        assert_eq!(exact_ve(&Graph::star(7)).unwrap().optimum, Some(1));
        assert_eq!(exact_ve(&Graph::empty(4)).unwrap().optimum, Some(0));
    }

    #[test]
    fn ktuple_examples() {
        let k3 = exact_ktuple(&Graph::complete(3), 2, None).unwrap();
        assert_eq!(k3.optimum, Some(2));
        assert!(verify_ktuple(&Graph::complete(3), k3.witness.as_ref().unwrap(), 2).unwrap());
        assert_eq!(exact_ktuple(&Graph::path(2), 2, None).unwrap().optimum, Some(2));
        assert_eq!(exact_ktuple(&Graph::path(3), 3, None).unwrap().optimum, None);
    }

    #[test]
    fn witnesses_verify() {
        let c7 = Graph::cycle(7);
        for k in 1..=4 {
            let res = exact_kve(&c7, k, None).unwrap();
            assert!(verify_kve(&c7, res.witness.as_ref().unwrap(), k).unwrap());
        }
    }

    #[test]
    fn budget_is_an_error() {
        let g = Graph::cycle(9);
        assert_eq!(
            exact_kve(&g, 3, Some(1)),
            Err(OracleError::BudgetExceeded { budget: 1 })
        );
    }

    #[test]
    fn forced_vertices_count() {
        let g = Graph::path(4);
        let mut l = StLabeling::uniform(&g, 1);
        l.set_label(0, Label::Required);
        l.set_label(3, Label::Required);
        let res = exact_st(&g, &l, None).unwrap();
        assert_eq!(res.optimum, Some(2));
        assert_eq!(res.witness, Some(VertexSet::from_vec(vec![0, 3])));
    }

    #[test]
    fn decide_below_optimum_fails() {
        let p5 = Graph::path(5);
        let problem = CoverProblem::kve(&p5, 2);
        assert!(problem.decide(2, None).unwrap().is_none());
        assert_eq!(problem.decide(3, None).unwrap().map(|d| d.len()), Some(3));
    }
}
