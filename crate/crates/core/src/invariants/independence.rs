use alloc::vec;
use alloc::vec::Vec;

use super::{
    bit, bits, full_mask, lowest, Budget, InvariantError, InvariantKind, InvariantResult, Mask, Prepared, Search,
    Witness,
};
use crate::hypergraph::Hypergraph;

/// Largest vertex set containing no edge.
///
/// Branches on the lowest undecided candidate, include first. Including `v`
/// removes from the candidates every `w` that would close an edge with `v` and an
/// already chosen vertex. The bound is `|chosen| + |candidates| - p`, where `p` is a
/// greedy packing of vertex-disjoint edges lying inside the candidates: each such
/// edge forces at least one of its vertices out.
pub fn independence_number(h: &Hypergraph, budget: Budget) -> Result<InvariantResult, InvariantError> {
    let p = Prepared::new(h)?;
    let n = p.n;
    let mut closing = vec![0 as Mask; n * n];
    for (e, &m) in p.edges.iter().enumerate() {
        let [a, b, c] = p.triple(e);
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            closing[x * n + y] |= bit(z);
            closing[y * n + x] |= bit(z);
        }
        debug_assert_eq!(m.count_ones(), 3);
    }
    let mut solver = Independence { p: &p, closing, search: Search::new(budget), best: 0, best_set: 0 };
    solver.descend(0, 0, full_mask(n));
    Ok(InvariantResult {
        kind: InvariantKind::Independence,
        value: solver.best as usize,
        witness: Witness::Vertices(bits(solver.best_set).collect()),
        nodes_explored: solver.search.nodes,
        budget_exhausted: solver.search.exhausted,
    })
}

struct Independence<'a> {
    p: &'a Prepared,
    closing: Vec<Mask>,
    search: Search,
    best: u32,
    best_set: Mask,
}

impl Independence<'_> {
    fn packing(&self, cand: Mask) -> u32 {
        let mut used = 0;
        let mut count = 0;
        for &e in &self.p.edges {
            if e & cand == e && e & used == 0 {
                used |= e;
                count += 1;
            }
        }
        count
    }

    fn descend(&mut self, chosen: Mask, size: u32, cand: Mask) {
        if !self.search.enter() {
            return;
        }
        if size > self.best {
            self.best = size;
            self.best_set = chosen;
        }
        if cand == 0 || size + cand.count_ones() <= self.best {
            return;
        }
        if size + cand.count_ones() - self.packing(cand) <= self.best {
            return;
        }
        let v = lowest(cand);
        let rest = cand & !bit(v);
        let n = self.p.n;
        let blocked = bits(chosen).fold(0, |m, u| m | self.closing[u * n + v]);
        self.descend(chosen | bit(v), size + 1, rest & !blocked);
        self.descend(chosen, size, rest);
    }
}

/// Smallest vertex set meeting every edge, searched directly.
///
/// Branches on the first uncovered edge {a,b,c}: take a; or skip a and take b; or
/// skip a,b and take c. Skipped vertices are excluded for the whole subtree. The
/// lower bound counts a greedy packing of pairwise disjoint uncovered edges.
pub fn transversal_number(h: &Hypergraph, budget: Budget) -> Result<InvariantResult, InvariantError> {
    let p = Prepared::new(h)?;
    let all = full_mask(p.n);
    let mut solver = Transversal { p: &p, search: Search::new(budget), best: p.n as u32, best_set: all };
    solver.descend(0, 0, 0);
    Ok(InvariantResult {
        kind: InvariantKind::Transversal,
        value: solver.best as usize,
        witness: Witness::Vertices(bits(solver.best_set).collect()),
        nodes_explored: solver.search.nodes,
        budget_exhausted: solver.search.exhausted,
    })
}

struct Transversal<'a> {
    p: &'a Prepared,
    search: Search,
    best: u32,
    best_set: Mask,
}

impl Transversal<'_> {
    fn descend(&mut self, taken: Mask, size: u32, excluded: Mask) {
        if !self.search.enter() {
            return;
        }
        let mut first = None;
        let mut used = 0;
        let mut packing = 0;
        for &e in &self.p.edges {
            if e & taken != 0 {
                continue;
            }
            if e & !excluded == 0 {
                return;
            }
            first.get_or_insert(e);
            if e & used == 0 {
                used |= e;
                packing += 1;
            }
        }
        let Some(edge) = first else {
            if size < self.best {
                self.best = size;
                self.best_set = taken;
            }
            return;
        };
        if size + packing >= self.best {
            return;
        }
        let mut skip = excluded;
        for v in bits(edge & !excluded) {
            self.descend(taken | bit(v), size + 1, skip);
            skip |= bit(v);
        }
    }
}
