use alloc::vec::Vec;

use super::{bits, full_mask, Budget, InvariantError, InvariantKind, InvariantResult, Mask, Prepared, Search, Witness};
use crate::hypergraph::Hypergraph;

/// Fewest edges whose union is every vertex.
///
/// Starts from a greedy cover, then branches on the uncovered vertex lying in the
/// fewest edges, trying its edges by descending new coverage. Prunes with
/// `chosen + ceil(uncovered / 3)`.
pub fn covering_number(h: &Hypergraph, budget: Budget) -> Result<InvariantResult, InvariantError> {
    let p = Prepared::new(h)?;
    let n = p.n;
    let mut incident: Vec<Vec<usize>> = (0..n).map(|_| Vec::new()).collect();
    for (i, &e) in p.edges.iter().enumerate() {
        for v in bits(e) {
            incident[v].push(i);
        }
    }
    if let Some(vertex) = incident.iter().position(Vec::is_empty) {
        return Err(InvariantError::IsolatedVertex { vertex });
    }
    let full = full_mask(n);

    let greedy = {
        let mut covered = 0;
        let mut chosen = Vec::new();
        while covered != full {
            let (i, _) = p
                .edges
                .iter()
                .enumerate()
                .map(|(i, &e)| (i, (e & !covered).count_ones()))
                .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
            covered |= p.edges[i];
            chosen.push(i);
        }
        chosen
    };

    let mut solver = Cover {
        p: &p,
        incident,
        full,
        search: Search::new(budget),
        lower: (n as u32).div_ceil(3),
        best: greedy,
        stack: Vec::new(),
    };
    if solver.best.len() as u32 > solver.lower {
        solver.descend(0);
    }
    let mut edges: Vec<[usize; 3]> = solver.best.iter().map(|&i| p.triple(i)).collect();
    edges.sort_unstable();
    Ok(InvariantResult {
        kind: InvariantKind::Covering,
        value: edges.len(),
        witness: Witness::Edges(edges),
        nodes_explored: solver.search.nodes,
        budget_exhausted: solver.search.exhausted,
    })
}

struct Cover<'a> {
    p: &'a Prepared,
    incident: Vec<Vec<usize>>,
    full: Mask,
    search: Search,
    lower: u32,
    best: Vec<usize>,
    stack: Vec<usize>,
}

impl Cover<'_> {
    fn done(&self) -> bool {
        self.best.len() as u32 <= self.lower
    }

    fn descend(&mut self, covered: Mask) {
        if !self.search.enter() {
            return;
        }
        let uncovered = self.full & !covered;
        if uncovered == 0 {
            if self.stack.len() < self.best.len() {
                self.best = self.stack.clone();
            }
            return;
        }
        if self.stack.len() as u32 + uncovered.count_ones().div_ceil(3) >= self.best.len() as u32 {
            return;
        }
        let v = bits(uncovered).min_by_key(|&v| self.incident[v].len()).unwrap();
        let mut options: Vec<(u32, usize)> =
            self.incident[v].iter().map(|&i| (3 - (self.p.edges[i] & uncovered).count_ones(), i)).collect();
        options.sort_unstable();
        for (_, i) in options {
            self.stack.push(i);
            self.descend(covered | self.p.edges[i]);
            self.stack.pop();
            if self.done() || self.search.exhausted {
                return;
            }
        }
    }
}
