//! Exact hypergraph invariants by node-budgeted search.
//!
//! Every solver works on the unordered support and returns a witness that
//! [`check_witness`] can re-validate in polynomial time. Vertex sets are `u128`
//! bitmasks, which caps solver inputs at [`MAX_SOLVER_VERTICES`].

mod coloring;
mod covering;
mod independence;
mod matching;

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::Hypergraph;

pub use coloring::{strong_chromatic_number, weak_chromatic_number};
pub use covering::covering_number;
pub use independence::{independence_number, transversal_number};
pub use matching::{format_matching_polynomial, matching_number, matching_polynomial, MatchingPolynomial};

pub const MAX_SOLVER_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("solvers support at most {max} vertices (got {count})")]
    TooManyVertices { count: usize, max: usize },
    #[error("covering is infeasible: vertex {vertex} lies in no edge")]
    IsolatedVertex { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness kind does not match invariant {0}")]
    WrongKind(InvariantKind),
    #[error("witness has size {size}, result claims {value}")]
    SizeMismatch { size: usize, value: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("vertex {0} repeated")]
    RepeatedVertex(usize),
    #[error("edge {0:?} is not an edge of the hypergraph")]
    UnknownEdge([usize; 3]),
    #[error("independent set contains edge {0:?}")]
    ContainsEdge([usize; 3]),
    #[error("transversal misses edge {0:?}")]
    MissesEdge([usize; 3]),
    #[error("cover misses vertex {0}")]
    Uncovered(usize),
    #[error("matching edges {0:?} and {1:?} intersect")]
    Overlap([usize; 3], [usize; 3]),
    #[error("coloring has {got} entries for {expected} vertices")]
    ColoringLength { got: usize, expected: usize },
    #[error("edge {0:?} is monochromatic")]
    Monochromatic([usize; 3]),
    #[error("vertices {0} and {1} share an edge and a color")]
    SameColorPair(usize, usize),
}

/// Node budget for a single solver run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(50_000_000);
}

impl Default for Budget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum InvariantKind {
    #[serde(rename = "alpha")]
    Independence,
    #[serde(rename = "tau")]
    Transversal,
    #[serde(rename = "rho")]
    Covering,
    #[serde(rename = "nu")]
    Matching,
    #[serde(rename = "chi")]
    WeakChromatic,
    #[serde(rename = "chi-strong")]
    StrongChromatic,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 6] = [
        InvariantKind::Independence,
        InvariantKind::Transversal,
        InvariantKind::Covering,
        InvariantKind::Matching,
        InvariantKind::WeakChromatic,
        InvariantKind::StrongChromatic,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            InvariantKind::Independence => "alpha",
            InvariantKind::Transversal => "tau",
            InvariantKind::Covering => "rho",
            InvariantKind::Matching => "nu",
            InvariantKind::WeakChromatic => "chi",
            InvariantKind::StrongChromatic => "chi-strong",
        }
    }

    /// Runs the solver for this invariant.
    pub fn solve(self, h: &Hypergraph, budget: Budget) -> Result<InvariantResult, InvariantError> {
        match self {
            InvariantKind::Independence => independence_number(h, budget),
            InvariantKind::Transversal => transversal_number(h, budget),
            InvariantKind::Covering => covering_number(h, budget),
            InvariantKind::Matching => matching_number(h, budget),
            InvariantKind::WeakChromatic => weak_chromatic_number(h, budget),
            InvariantKind::StrongChromatic => strong_chromatic_number(h, budget),
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for InvariantKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InvariantKind::ALL.into_iter().find(|k| k.tag() == s).ok_or(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Vertices(Vec<usize>),
    Edges(Vec<[usize; 3]>),
    /// Color per vertex.
    Coloring(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub kind: InvariantKind,
    /// Proven optimum, or the best value found when the budget ran out.
    pub value: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub budget_exhausted: bool,
}

impl InvariantResult {
    pub fn is_optimal(&self) -> bool {
        !self.budget_exhausted
    }

    pub fn check(&self, h: &Hypergraph) -> Result<(), WitnessError> {
        check_witness(h, self.kind, &self.witness, self.value)
    }
}

/// Verifies that `witness` certifies a feasible solution of size `value`.
pub fn check_witness(h: &Hypergraph, kind: InvariantKind, witness: &Witness, value: usize) -> Result<(), WitnessError> {
    let n = h.vertex_count();
    let vertex_set = |vs: &[usize]| -> Result<Vec<bool>, WitnessError> {
        let mut mark = alloc::vec![false; n];
        for &v in vs {
            if v >= n {
                return Err(WitnessError::VertexOutOfRange(v));
            }
            if core::mem::replace(&mut mark[v], true) {
                return Err(WitnessError::RepeatedVertex(v));
            }
        }
        Ok(mark)
    };
    let sized = |size: usize| if size == value { Ok(()) } else { Err(WitnessError::SizeMismatch { size, value }) };
    match (kind, witness) {
        (InvariantKind::Independence, Witness::Vertices(vs)) => {
            let mark = vertex_set(vs)?;
            if let Some(e) = h.edges().iter().find(|e| e.iter().all(|&v| mark[v])) {
                return Err(WitnessError::ContainsEdge(*e));
            }
            sized(vs.len())
        }
        (InvariantKind::Transversal, Witness::Vertices(vs)) => {
            let mark = vertex_set(vs)?;
            if let Some(e) = h.edges().iter().find(|e| !e.iter().any(|&v| mark[v])) {
                return Err(WitnessError::MissesEdge(*e));
            }
            sized(vs.len())
        }
        (InvariantKind::Covering, Witness::Edges(es)) => {
            let mut covered = alloc::vec![false; n];
            for e in es {
                if h.edges().binary_search(e).is_err() {
                    return Err(WitnessError::UnknownEdge(*e));
                }
                e.iter().for_each(|&v| covered[v] = true);
            }
            if let Some(v) = covered.iter().position(|&c| !c) {
                return Err(WitnessError::Uncovered(v));
            }
            sized(es.len())
        }
        (InvariantKind::Matching, Witness::Edges(es)) => {
            let mut owner: Vec<Option<[usize; 3]>> = alloc::vec![None; n];
            for e in es {
                if h.edges().binary_search(e).is_err() {
                    return Err(WitnessError::UnknownEdge(*e));
                }
                for &v in e {
                    if let Some(other) = owner[v].replace(*e) {
                        return Err(WitnessError::Overlap(other, *e));
                    }
                }
            }
            sized(es.len())
        }
        (InvariantKind::WeakChromatic, Witness::Coloring(colors)) => {
            if colors.len() != n {
                return Err(WitnessError::ColoringLength { got: colors.len(), expected: n });
            }
            if let Some(e) = h.edges().iter().find(|&&[a, b, c]| colors[a] == colors[b] && colors[b] == colors[c]) {
                return Err(WitnessError::Monochromatic(*e));
            }
            sized(distinct_colors(colors))
        }
        (InvariantKind::StrongChromatic, Witness::Coloring(colors)) => {
            if colors.len() != n {
                return Err(WitnessError::ColoringLength { got: colors.len(), expected: n });
            }
            for &[a, b, c] in h.edges() {
                for (u, v) in [(a, b), (a, c), (b, c)] {
                    if colors[u] == colors[v] {
                        return Err(WitnessError::SameColorPair(u, v));
                    }
                }
            }
            sized(distinct_colors(colors))
        }
        (kind, _) => Err(WitnessError::WrongKind(kind)),
    }
}

fn distinct_colors(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

type Mask = u128;

#[inline]
fn bit(v: usize) -> Mask {
    1 << v
}

#[inline]
fn lowest(m: Mask) -> usize {
    m.trailing_zeros() as usize
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = lowest(m);
            m &= m - 1;
            Some(v)
        }
    })
}

fn full_mask(n: usize) -> Mask {
    if n == 128 {
        Mask::MAX
    } else {
        bit(n) - 1
    }
}

/// Bitmask view of a support hypergraph shared by the solvers.
struct Prepared {
    n: usize,
    edges: Vec<Mask>,
}

impl Prepared {
    fn new(h: &Hypergraph) -> Result<Self, InvariantError> {
        let n = h.vertex_count();
        if n > MAX_SOLVER_VERTICES {
            return Err(InvariantError::TooManyVertices { count: n, max: MAX_SOLVER_VERTICES });
        }
        let edges = h.edges().iter().map(|e| e.iter().fold(0, |m, &v| m | bit(v))).collect();
        Ok(Self { n, edges })
    }

    fn triple(&self, e: usize) -> [usize; 3] {
        let mut it = bits(self.edges[e]);
        [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
    }
}

/// Node counter; `enter` refuses once the limit is reached and latches `exhausted`.
struct Search {
    limit: u64,
    nodes: u64,
    exhausted: bool,
}

impl Search {
    fn new(budget: Budget) -> Self {
        Self { limit: budget.0, nodes: 0, exhausted: false }
    }

    #[inline]
    fn enter(&mut self) -> bool {
        if self.nodes >= self.limit {
            self.exhausted = true;
            false
        } else {
            self.nodes += 1;
            true
        }
    }
}
