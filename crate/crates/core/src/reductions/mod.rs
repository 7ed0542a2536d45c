//! Gadget graphs that relate k-vertex-edge domination to other problems,
//! with checkers that confirm each relationship on small inputs through the
//! exact oracle.
//!
//! * [`build_ex3c_gadget`]: exact 3-cover instance to a chordal graph whose
//!   k-ve domination number is at most `k + q + 3qk` iff an exact cover
//!   exists.
//! * [`build_ve_to_kve`]: graph `G` to `G'` with `γ_kve(G') = γ_ve(G) + k`.
//! * [`build_ktuple_to_kve`]: one pendant per vertex, so that k-tuple
//!   domination of `G` and k-ve domination of `G'` have the same optimum.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::exact::OracleError;
use crate::graph::{Graph, Vertex};

mod ex3c;
mod ktuple;
mod ve;

pub use ex3c::{build_ex3c_gadget, check_ex3c_claim, ex3c_claim, exact_cover, Ex3CClaim, Ex3CInstance};
pub use ktuple::{build_ktuple_to_kve, check_ktuple_claim, ktuple_claim, KtupleClaim};
pub use ve::{build_ve_to_kve, check_ve_to_kve_claim, ve_to_kve_claim, VeClaim};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("subset {index} has {len} members, expected 3")]
    NotATriple { index: usize, len: usize },
    #[error("subset {index} lists element {element} twice")]
    DuplicateMember { index: usize, element: usize },
    #[error("subset {index} has element {element} outside 0..{universe}")]
    ElementOutOfRange {
        index: usize,
        element: usize,
        universe: usize,
    },
    #[error("the construction needs k >= {min}, got {k}")]
    DemandTooSmall { k: usize, min: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ClaimError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// What a gadget vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// Universe element `i` of an exact 3-cover instance.
    Element(usize),
    /// Subset `j` of the collection.
    Subset(usize),
    /// Member of the padding clique joined to all subsets.
    Pad(usize),
    /// Vertex joined to the padding clique (or the added clique) and to
    /// [`Role::Tail`].
    Hub,
    /// Pendant neighbor of [`Role::Hub`].
    Tail,
    /// Private neighbor of element `i`.
    Guard(usize),
    /// Member `j` of the clique hanging off guard `i`.
    Shield(usize, usize),
    /// Vertex joined to every shield of element `i`.
    Anchor(usize),
    /// Pendant neighbor of anchor `i`.
    Leaf(usize),
    /// Vertex `i` of the source graph.
    Original(usize),
    /// Member `j` of the clique joined to every original vertex.
    Clique(usize),
    /// Pendant attached to original vertex `i`.
    Pendant(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Element(i) => write!(f, "element:{i}"),
            Role::Subset(j) => write!(f, "subset:{j}"),
            Role::Pad(i) => write!(f, "pad:{i}"),
            Role::Hub => f.write_str("hub"),
            Role::Tail => f.write_str("tail"),
            Role::Guard(i) => write!(f, "guard:{i}"),
            Role::Shield(i, j) => write!(f, "shield:{i}:{j}"),
            Role::Anchor(i) => write!(f, "anchor:{i}"),
            Role::Leaf(i) => write!(f, "leaf:{i}"),
            Role::Original(i) => write!(f, "original:{i}"),
            Role::Clique(j) => write!(f, "clique:{j}"),
            Role::Pendant(i) => write!(f, "pendant:{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown role {0:?}")]
pub struct ParseRoleError(pub String);

impl FromStr for Role {
    type Err = ParseRoleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRoleError(s.into());
        let mut parts = s.split(':');
        let kind = parts.next().ok_or_else(err)?;
        let nums: Vec<usize> = parts.map(|p| p.parse().map_err(|_| err())).collect::<Result<_, _>>()?;
        let role = match (kind, nums.as_slice()) {
            ("element", &[i]) => Role::Element(i),
            ("subset", &[j]) => Role::Subset(j),
            ("pad", &[i]) => Role::Pad(i),
            ("hub", &[]) => Role::Hub,
            ("tail", &[]) => Role::Tail,
            ("guard", &[i]) => Role::Guard(i),
            ("shield", &[i, j]) => Role::Shield(i, j),
            ("anchor", &[i]) => Role::Anchor(i),
            ("leaf", &[i]) => Role::Leaf(i),
            ("original", &[i]) => Role::Original(i),
            ("clique", &[j]) => Role::Clique(j),
            ("pendant", &[i]) => Role::Pendant(i),
            _ => return Err(err()),
        };
        Ok(role)
    }
}

/// Which construction produced a gadget, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    ExactCover {
        instance: Ex3CInstance,
        k: usize,
    },
    VeToKve {
        source_n: usize,
        source_m: usize,
        k: usize,
    },
    /// The hardness argument for this construction assumes `k >= 2` and a
    /// source maximum degree of at most `k + 2`; the builder only records the
    /// degree, see [`Provenance::within_degree_bound`].
    KtupleToKve {
        source_n: usize,
        source_m: usize,
        source_max_degree: usize,
    },
}

impl Provenance {
    /// For k-tuple gadgets: whether the source graph meets `Δ <= k + 2` with
    /// `k >= 2`. Always true for the other constructions.
    pub fn within_degree_bound(&self, k: usize) -> bool {
        match *self {
            Provenance::KtupleToKve { source_max_degree, .. } => k >= 2 && source_max_degree <= k + 2,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub provenance: Provenance,
}

impl GadgetGraph {
    pub fn role(&self, v: Vertex) -> Role {
        self.roles[v]
    }

    /// Vertices carrying roles accepted by `pred`, in id order.
    pub fn vertices_where(&self, pred: impl Fn(Role) -> bool) -> Vec<Vertex> {
        (0..self.roles.len()).filter(|&v| pred(self.roles[v])).collect()
    }

    /// Checks that every edge is produced by exactly one construction rule and
    /// that edge and role counts match the construction.
    pub fn audit(&self) -> Result<(), AuditError> {
        if self.roles.len() != self.graph.n() {
            return Err(AuditError::RoleCount {
                expected: self.graph.n(),
                found: self.roles.len(),
            });
        }
        let rules = self.rules();
        for &(u, v) in self.graph.edges() {
            let (a, b) = (self.roles[u], self.roles[v]);
            let hits = rules.iter().filter(|rule| rule(a, b) || rule(b, a)).count();
            if hits != 1 {
                return Err(AuditError::UnexplainedEdge { u, v, rules: hits });
            }
        }
        let (expected_n, expected_m) = self.expected_size();
        if self.graph.n() != expected_n {
            return Err(AuditError::RoleCount {
                expected: expected_n,
                found: self.graph.n(),
            });
        }
        if self.graph.m() != expected_m {
            return Err(AuditError::EdgeCount {
                expected: expected_m,
                found: self.graph.m(),
            });
        }
        let mut sorted = self.roles.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(AuditError::DuplicateRole);
        }
        Ok(())
    }

    fn expected_size(&self) -> (usize, usize) {
        let pairs = |x: usize| x * x.saturating_sub(1) / 2;
        match &self.provenance {
            Provenance::ExactCover { instance, k } => {
                let (q3, m, k) = (3 * instance.q(), instance.len(), *k);
                let n = q3 + m + (k - 2) + 2 + q3 + q3 * (k - 1) + 2 * q3;
                let edges = pairs(m)
                    + 3 * m
                    + pairs(k - 2)
                    + (k - 2) * m
                    + 1
                    + (k - 2)
                    + q3
                    + q3 * pairs(k - 1)
                    + q3 * (k - 1)
                    + q3
                    + q3 * (k - 1);
                (n, edges)
            }
            Provenance::VeToKve { source_n, source_m, k } => {
                let c = k - 1;
                (source_n + k + 1, source_m + source_n * c + pairs(c) + c + 1)
            }
            Provenance::KtupleToKve { source_n, source_m, .. } => (2 * source_n, source_m + source_n),
        }
    }

    fn rules(&self) -> Vec<Rule<'_>> {
        use Role::*;
        match &self.provenance {
            Provenance::ExactCover { instance, .. } => alloc::vec![
                Box::new(|a, b| matches!((a, b), (Subset(i), Subset(j)) if i < j)) as Rule<'_>,
                Box::new(move |a, b| match (a, b) {
                    (Element(i), Subset(j)) => instance.subsets()[j].contains(&i),
                    _ => false,
                }),
                Box::new(|a, b| matches!((a, b), (Pad(i), Pad(j)) if i < j)),
                Box::new(|a, b| matches!((a, b), (Pad(_), Subset(_)))),
                Box::new(|a, b| matches!((a, b), (Hub, Tail))),
                Box::new(|a, b| matches!((a, b), (Hub, Pad(_)))),
                Box::new(|a, b| matches!((a, b), (Element(i), Guard(j)) if i == j)),
                Box::new(|a, b| matches!((a, b), (Shield(i, x), Shield(j, y)) if i == j && x < y)),
                Box::new(|a, b| matches!((a, b), (Guard(i), Shield(j, _)) if i == j)),
                Box::new(|a, b| matches!((a, b), (Anchor(i), Leaf(j)) if i == j)),
                Box::new(|a, b| matches!((a, b), (Anchor(i), Shield(j, _)) if i == j)),
            ],
            Provenance::VeToKve { .. } => alloc::vec![
                Box::new(|a, b| matches!((a, b), (Original(i), Original(j)) if i < j)) as Rule<'_>,
                Box::new(|a, b| matches!((a, b), (Original(_), Clique(_)))),
                Box::new(|a, b| matches!((a, b), (Clique(i), Clique(j)) if i < j)),
                Box::new(|a, b| matches!((a, b), (Clique(_), Hub))),
                Box::new(|a, b| matches!((a, b), (Hub, Tail))),
            ],
            Provenance::KtupleToKve { .. } => alloc::vec![
                Box::new(|a, b| matches!((a, b), (Original(i), Original(j)) if i < j)) as Rule<'_>,
                Box::new(|a, b| matches!((a, b), (Original(i), Pendant(j)) if i == j)),
            ],
        }
    }
}

type Rule<'a> = Box<dyn Fn(Role, Role) -> bool + 'a>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AuditError {
    #[error("edge {u}-{v} matches {rules} construction rules")]
    UnexplainedEdge { u: Vertex, v: Vertex, rules: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("expected {expected} vertices, found {found}")]
    RoleCount { expected: usize, found: usize },
    #[error("two vertices share a role")]
    DuplicateRole,
}
