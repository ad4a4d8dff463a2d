//! Exhaustive reference values for small hypergraphs (at most 16 vertices).
//!
//! Deliberately naive: subset scans and subset DPs over plain `u32` masks, sharing
//! no code with the solvers under test.

#![allow(dead_code)]

use std::collections::BTreeMap;

pub struct Oracle {
    pub n: usize,
    pub edges: Vec<u32>,
}

impl Oracle {
    pub fn new(n: usize, edges: &[[usize; 3]]) -> Self {
        assert!(n <= 16, "oracle is exponential in |V|");
        let mut masks: Vec<u32> = edges.iter().map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        masks.sort_unstable();
        masks.dedup();
        Oracle { n, edges: masks }
    }

    fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    fn contains_edge(&self, set: u32) -> bool {
        self.edges.iter().any(|&e| e & !set == 0)
    }

    /// Largest vertex set containing no whole edge.
    pub fn independence(&self) -> usize {
        (0..=self.full()).filter(|&s| !self.contains_edge(s)).map(|s| s.count_ones() as usize).max().unwrap_or(0)
    }

    /// Smallest vertex set meeting every edge.
    pub fn transversal(&self) -> usize {
        (0..=self.full())
            .filter(|&t| self.edges.iter().all(|&e| e & t != 0))
            .map(|t| t.count_ones() as usize)
            .min()
            .unwrap()
    }

    /// Fewest edges whose union is V, by BFS over union masks; `None` if impossible.
    pub fn covering(&self) -> Option<usize> {
        let full = self.full();
        let mut dist = vec![usize::MAX; full as usize + 1];
        dist[0] = 0;
        let mut frontier = vec![0u32];
        let mut d = 0;
        while !frontier.is_empty() {
            if frontier.contains(&full) {
                return Some(d);
            }
            let mut next = Vec::new();
            for &m in &frontier {
                for &e in &self.edges {
                    let u = m | e;
                    if dist[u as usize] == usize::MAX {
                        dist[u as usize] = d + 1;
                        next.push(u);
                    }
                }
            }
            frontier = next;
            d += 1;
        }
        None
    }

    /// a_k = number of k-edge matchings, built edge by edge over used-vertex masks.
    pub fn matching_counts(&self) -> Vec<u64> {
        let mut states: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
        states.insert(0, vec![1]);
        for &e in &self.edges {
            let additions: Vec<(u32, Vec<u64>)> = states
                .iter()
                .filter(|(&used, _)| used & e == 0)
                .map(|(&used, counts)| (used | e, counts.clone()))
                .collect();
            for (mask, counts) in additions {
                let slot = states.entry(mask).or_default();
                // every matching in `counts` gains one edge
                if slot.len() < counts.len() + 1 {
                    slot.resize(counts.len() + 1, 0);
                }
                for (k, c) in counts.iter().enumerate() {
                    slot[k + 1] += c;
                }
            }
        }
        let mut total: Vec<u64> = Vec::new();
        for counts in states.values() {
            if total.len() < counts.len() {
                total.resize(counts.len(), 0);
            }
            for (k, c) in counts.iter().enumerate() {
                total[k] += c;
            }
        }
        while total.len() > 1 && total.last() == Some(&0) {
            total.pop();
        }
        total
    }

    pub fn matching(&self) -> usize {
        self.matching_counts().len() - 1
    }

    /// Fewest classes partitioning V with each class `ok`; subset DP anchored at the lowest vertex.
    fn partition_number(&self, ok: impl Fn(u32) -> bool) -> usize {
        let full = self.full();
        let good: Vec<bool> = (0..=full).map(&ok).collect();
        let mut best = vec![usize::MAX; full as usize + 1];
        best[0] = 0;
        for mask in 1..=full {
            let low = mask & mask.wrapping_neg();
            let rest = mask & !low;
            // enumerate subsets of `rest`, add the anchor
            let mut sub = rest;
            loop {
                let class = sub | low;
                if good[class as usize] {
                    let prev = best[(mask & !class) as usize];
                    if prev != usize::MAX {
                        best[mask as usize] = best[mask as usize].min(prev + 1);
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        best[full as usize]
    }

    pub fn weak_chromatic(&self) -> usize {
        self.partition_number(|s| !self.contains_edge(s))
    }

    pub fn strong_chromatic(&self) -> usize {
        self.partition_number(|s| self.edges.iter().all(|&e| (e & s).count_ones() <= 1))
    }
}

#[test]
fn oracle_self_check() {
    // K_5^(3): every triple is an edge
    let mut edges = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                edges.push([a, b, c]);
            }
        }
    }
    let o = Oracle::new(5, &edges);
    assert_eq!(o.independence(), 2);
    assert_eq!(o.transversal(), 3);
    assert_eq!(o.covering(), Some(2));
    assert_eq!(o.matching_counts(), vec![1, 10]);
    assert_eq!(o.weak_chromatic(), 3);
    assert_eq!(o.strong_chromatic(), 5);

    let path = Oracle::new(7, &[[0, 1, 2], [2, 3, 4], [4, 5, 6]]);
    assert_eq!(path.matching_counts(), vec![1, 3, 1]);
    assert_eq!(path.covering(), Some(3));
    assert_eq!(Oracle::new(4, &[[0, 1, 2]]).covering(), None);
}
