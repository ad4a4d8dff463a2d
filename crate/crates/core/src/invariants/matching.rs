use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use serde::Serialize;

use super::{
    bit, bits, full_mask, lowest, Budget, InvariantError, InvariantKind, InvariantResult, Mask, Prepared, Search,
    Witness,
};
use crate::hypergraph::Hypergraph;

/// Most pairwise vertex-disjoint edges.
///
/// The lowest undecided vertex is either matched by one of its edges whose other
/// vertices are still undecided, or left unmatched. Bound: `|M| + undecided / 3`.
pub fn matching_number(h: &Hypergraph, budget: Budget) -> Result<InvariantResult, InvariantError> {
    let p = Prepared::new(h)?;
    let mut incident: Vec<Vec<usize>> = (0..p.n).map(|_| Vec::new()).collect();
    for (i, &e) in p.edges.iter().enumerate() {
        for v in bits(e) {
            incident[v].push(i);
        }
    }
    let mut solver = Matching {
        p: &p,
        incident,
        search: Search::new(budget),
        best: Vec::new(),
        stack: Vec::new(),
        ceiling: p.n / 3,
    };
    solver.descend(full_mask(p.n));
    let edges: Vec<[usize; 3]> = solver.best.iter().map(|&i| p.triple(i)).collect();
    Ok(InvariantResult {
        kind: InvariantKind::Matching,
        value: edges.len(),
        witness: Witness::Edges(edges),
        nodes_explored: solver.search.nodes,
        budget_exhausted: solver.search.exhausted,
    })
}

struct Matching<'a> {
    p: &'a Prepared,
    incident: Vec<Vec<usize>>,
    search: Search,
    best: Vec<usize>,
    stack: Vec<usize>,
    ceiling: usize,
}

impl Matching<'_> {
    fn descend(&mut self, undecided: Mask) {
        if !self.search.enter() {
            return;
        }
        if self.stack.len() > self.best.len() {
            self.best = self.stack.clone();
        }
        if undecided == 0 || self.stack.len() + undecided.count_ones() as usize / 3 <= self.best.len() {
            return;
        }
        let v = lowest(undecided);
        for k in 0..self.incident[v].len() {
            let i = self.incident[v][k];
            let e = self.p.edges[i];
            if e & undecided == e {
                self.stack.push(i);
                self.descend(undecided & !e);
                self.stack.pop();
                if self.best.len() == self.ceiling || self.search.exhausted {
                    return;
                }
            }
        }
        self.descend(undecided & !bit(v));
    }
}

/// Counts of k-edge matchings, a_0..a_nu, for the polynomial sum a_k w1^(|V|-3k) w2^k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingPolynomial {
    /// Trimmed after the last nonzero entry.
    pub coefficients: Vec<u128>,
    pub vertex_count: usize,
    pub nodes_explored: u64,
    /// Coefficients are partial counts when set.
    pub budget_exhausted: bool,
}

impl MatchingPolynomial {
    /// Index of the last nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }
}

/// Enumerates every matching once, as an increasing sequence of edge ids.
///
/// Edges are sorted lexicographically, so in such a sequence the minimum vertices
/// strictly increase; children are generated from per-minimum-vertex buckets.
/// Each visited node is one matching and costs one unit of budget.
pub fn matching_polynomial(h: &Hypergraph, budget: Budget) -> Result<MatchingPolynomial, InvariantError> {
    let p = Prepared::new(h)?;
    let mut by_min: Vec<Vec<Mask>> = (0..p.n).map(|_| Vec::new()).collect();
    for &e in &p.edges {
        by_min[lowest(e)].push(e);
    }
    let mut counter = PolyCounter { by_min, search: Search::new(budget), counts: vec![0; p.n / 3 + 1] };
    counter.descend(0, 0, 0);
    let mut coefficients = counter.counts;
    while coefficients.len() > 1 && coefficients.last() == Some(&0) {
        coefficients.pop();
    }
    Ok(MatchingPolynomial {
        coefficients,
        vertex_count: p.n,
        nodes_explored: counter.search.nodes,
        budget_exhausted: counter.search.exhausted,
    })
}

struct PolyCounter {
    by_min: Vec<Vec<Mask>>,
    search: Search,
    counts: Vec<u128>,
}

impl PolyCounter {
    fn descend(&mut self, used: Mask, start: usize, depth: usize) {
        if !self.search.enter() {
            return;
        }
        self.counts[depth] += 1;
        for u in start..self.by_min.len() {
            if used & bit(u) != 0 {
                continue;
            }
            for k in 0..self.by_min[u].len() {
                let e = self.by_min[u][k];
                if e & used == 0 {
                    self.descend(used | e, u + 1, depth + 1);
                    if self.search.exhausted {
                        return;
                    }
                }
            }
        }
    }
}

/// Renders `a_k*w1^(|V|-3k)*w2^k` terms in ascending k, dropping the w2 factor at k = 0.
pub fn format_matching_polynomial(p: &MatchingPolynomial) -> String {
    let mut out = String::new();
    for (k, a) in p.coefficients.iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        let w1 = p.vertex_count as i64 - 3 * k as i64;
        let _ = write!(out, "{a}*w1^{w1}");
        if k > 0 {
            out.push_str(&format!("*w2^{k}"));
        }
    }
    out
}
