use alloc::vec;
use alloc::vec::Vec;

use super::{
    bit, bits, full_mask, Budget, InvariantError, InvariantKind, InvariantResult, Mask, Prepared, Search, Witness,
};
use crate::hypergraph::Hypergraph;

/// Fewest colors with no monochromatic edge.
///
/// A first-fit coloring gives the upper bound; then k = 2, 3, .. is tested by
/// backtracking in vertex order. Vertex 0 takes color 0 and a vertex may open
/// color c only if c - 1 is already in use.
pub fn weak_chromatic_number(h: &Hypergraph, budget: Budget) -> Result<InvariantResult, InvariantError> {
    let p = Prepared::new(h)?;
    let n = p.n;
    // closers[v]: for each edge whose largest vertex is v, the mask of its other two
    let mut closers: Vec<Vec<Mask>> = vec![Vec::new(); n];
    for &e in &p.edges {
        let top = 127 - e.leading_zeros() as usize;
        closers[top].push(e & !bit(top));
    }
    let mut search = Search::new(budget);
    let result = |value, coloring, search: &Search| InvariantResult {
        kind: InvariantKind::WeakChromatic,
        value,
        witness: Witness::Coloring(coloring),
        nodes_explored: search.nodes,
        budget_exhausted: search.exhausted,
    };
    if n == 0 {
        return Ok(result(0, Vec::new(), &search));
    }

    let mut greedy = vec![0usize; n];
    let mut classes: Vec<Mask> = Vec::new();
    for v in 0..n {
        let c =
            (0..classes.len()).find(|&c| closers[v].iter().all(|&pm| classes[c] & pm != pm)).unwrap_or(classes.len());
        if c == classes.len() {
            classes.push(0);
        }
        classes[c] |= bit(v);
        greedy[v] = c;
    }
    let upper = classes.len();
    let lower = if p.edges.is_empty() { 1 } else { 2 };

    for k in lower..upper {
        let mut attempt =
            WeakAttempt { closers: &closers, search: &mut search, k, classes: vec![0; k], colors: vec![0; n] };
        if attempt.descend(0, 0) {
            let colors = attempt.colors;
            return Ok(result(k, colors, &search));
        }
        if search.exhausted {
            break;
        }
    }
    Ok(result(upper, greedy, &search))
}

struct WeakAttempt<'a> {
    closers: &'a [Vec<Mask>],
    search: &'a mut Search,
    k: usize,
    classes: Vec<Mask>,
    colors: Vec<usize>,
}

impl WeakAttempt<'_> {
    fn descend(&mut self, v: usize, used: usize) -> bool {
        if !self.search.enter() {
            return false;
        }
        if v == self.colors.len() {
            return true;
        }
        for c in 0..(used + 1).min(self.k) {
            let class = self.classes[c];
            if self.closers[v].iter().any(|&pm| pm & !class == 0) {
                continue;
            }
            self.classes[c] |= bit(v);
            self.colors[v] = c;
            if self.descend(v + 1, used.max(c + 1)) {
                return true;
            }
            self.classes[c] &= !bit(v);
            if self.search.exhausted {
                return false;
            }
        }
        false
    }
}

/// Chromatic number of the co-occurrence graph.
///
/// Returns |V| at once when every pair shares an edge. Otherwise runs DSATUR
/// branch and bound between a greedy clique and a DSATUR coloring.
pub fn strong_chromatic_number(h: &Hypergraph, budget: Budget) -> Result<InvariantResult, InvariantError> {
    let p = Prepared::new(h)?;
    let n = p.n;
    let mut adj = vec![0 as Mask; n];
    for &e in &p.edges {
        for v in bits(e) {
            adj[v] |= e & !bit(v);
        }
    }
    let mut search = Search::new(budget);
    let full = full_mask(n);
    let result = |value, coloring, search: &Search| InvariantResult {
        kind: InvariantKind::StrongChromatic,
        value,
        witness: Witness::Coloring(coloring),
        nodes_explored: search.nodes,
        budget_exhausted: search.exhausted,
    };
    if (0..n).all(|v| adj[v] | bit(v) == full) {
        return Ok(result(n, (0..n).collect(), &search));
    }

    let clique = {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| core::cmp::Reverse(adj[v].count_ones()));
        let mut members: Mask = 0;
        for v in order {
            if adj[v] & members == members {
                members |= bit(v);
            }
        }
        members.count_ones() as usize
    };

    let mut solver = Dsatur {
        adj: &adj,
        search: &mut search,
        colors: vec![usize::MAX; n],
        classes: Vec::new(),
        best: n + 1,
        best_colors: Vec::new(),
        lower: clique,
    };
    solver.greedy();
    if solver.best > solver.lower {
        solver.descend();
    }
    let (value, colors) = (solver.best, solver.best_colors);
    Ok(result(value, colors, &search))
}

struct Dsatur<'a> {
    adj: &'a [Mask],
    search: &'a mut Search,
    colors: Vec<usize>,
    classes: Vec<Mask>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
}

impl Dsatur<'_> {
    /// Uncolored vertex of maximum saturation, then maximum uncolored degree, then lowest index.
    fn pick(&self) -> Option<usize> {
        let uncolored: Mask =
            (0..self.colors.len()).filter(|&v| self.colors[v] == usize::MAX).fold(0, |m, v| m | bit(v));
        bits(uncolored).max_by_key(|&v| {
            let sat = self.classes.iter().filter(|&&cls| cls & self.adj[v] != 0).count();
            let deg = (self.adj[v] & uncolored).count_ones();
            (sat, deg, core::cmp::Reverse(v))
        })
    }

    fn fits(&self, v: usize, c: usize) -> bool {
        self.classes[c] & self.adj[v] == 0
    }

    fn assign(&mut self, v: usize, c: usize) {
        if c == self.classes.len() {
            self.classes.push(0);
        }
        self.classes[c] |= bit(v);
        self.colors[v] = c;
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.classes[c] &= !bit(v);
        self.colors[v] = usize::MAX;
        if self.classes[c] == 0 && c + 1 == self.classes.len() {
            self.classes.pop();
        }
    }

    fn greedy(&mut self) {
        while let Some(v) = self.pick() {
            let c = (0..self.classes.len()).find(|&c| self.fits(v, c)).unwrap_or(self.classes.len());
            self.assign(v, c);
        }
        self.best = self.classes.len();
        self.best_colors = core::mem::take(&mut self.colors);
        self.colors = vec![usize::MAX; self.best_colors.len()];
        self.classes.clear();
    }

    fn descend(&mut self) {
        if !self.search.enter() || self.classes.len() >= self.best {
            return;
        }
        let Some(v) = self.pick() else {
            if self.classes.len() < self.best {
                self.best = self.classes.len();
                self.best_colors = self.colors.clone();
            }
            return;
        };
        let used = self.classes.len();
        for c in 0..=used {
            if c + 1 >= self.best {
                break;
            }
            if c < used && !self.fits(v, c) {
                continue;
            }
            self.assign(v, c);
            self.descend();
            self.unassign(v, c);
            if self.best <= self.lower || self.search.exhausted {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[[usize; 3]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn weak_basics() {
        let r = weak_chromatic_number(&h(4, &[]), Budget::DEFAULT).unwrap();
        assert_eq!(r.value, 1);
        let g = h(3, &[[0, 1, 2]]);
        let r = weak_chromatic_number(&g, Budget::DEFAULT).unwrap();
        assert_eq!(r.value, 2);
        r.check(&g).unwrap();
        assert_eq!(weak_chromatic_number(&h(0, &[]), Budget::DEFAULT).unwrap().value, 0);
    }

    #[test]
    fn weak_needs_three_on_complete_five() {
        let mut e = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    e.push([a, b, c]);
                }
            }
        }
        let g = h(5, &e);
        let r = weak_chromatic_number(&g, Budget::DEFAULT).unwrap();
        // each color class holds at most 2 vertices
        assert_eq!(r.value, 3);
        r.check(&g).unwrap();
    }

    #[test]
    fn strong_basics() {
        let g = h(3, &[[0, 1, 2]]);
        assert_eq!(strong_chromatic_number(&g, Budget::DEFAULT).unwrap().value, 3);
        let g = h(6, &[[0, 1, 2], [3, 4, 5]]);
        let r = strong_chromatic_number(&g, Budget::DEFAULT).unwrap();
        assert_eq!(r.value, 3);
        r.check(&g).unwrap();
        assert_eq!(strong_chromatic_number(&h(3, &[]), Budget::DEFAULT).unwrap().value, 1);
    }

    #[test]
    fn strong_on_overlapping_triangles() {
        // co-occurrence graph is the wheel W5: largest clique 3, needs 4 colors
        let g = h(6, &[[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5]]);
        let r = strong_chromatic_number(&g, Budget::DEFAULT).unwrap();
        assert_eq!(r.value, 4);
        r.check(&g).unwrap();
    }
}
