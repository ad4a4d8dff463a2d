//! The associating hypergraph of a loop and its unordered 3-uniform support.
//!
//! Counting questions (edge totals, degrees, case breakdowns) use the ordered
//! triples; every set-based invariant uses the support, where each directed edge
//! collapses to its 3-set.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::Loop;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edge {edge:?} repeats a vertex")]
    RepeatedVertex { edge: [usize; 3] },
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("distance requires distinct vertices (got {0} twice)")]
    SameVertex(usize),
}

/// An ordered associating triple (x, y, z) of pairwise distinct vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DirectedHyperedge {
    pub triple: [usize; 3],
}

impl DirectedHyperedge {
    pub fn support(&self) -> [usize; 3] {
        let mut s = self.triple;
        s.sort_unstable();
        s
    }

    pub fn contains(&self, v: usize) -> bool {
        self.triple.contains(&v)
    }
}

/// A 3-uniform hypergraph on `0..vertex_count` with sorted, deduplicated edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph {
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = [usize; 3]>,
    {
        let mut out = Vec::new();
        for edge in edges {
            if let Some(&vertex) = edge.iter().find(|&&v| v >= vertex_count) {
                return Err(HypergraphError::VertexOutOfRange { vertex, vertex_count });
            }
            let mut e = edge;
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(HypergraphError::RepeatedVertex { edge });
            }
            out.push(e);
        }
        out.sort_unstable();
        out.dedup();
        Ok(Self { vertex_count, edges: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges in lexicographic order; an edge's id is its position here.
    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.contains(&v)).map(|(i, _)| i)
    }

    /// Row-major |V|x|V| matrix: true iff the two vertices share an edge.
    pub fn co_occurrence(&self) -> Vec<bool> {
        let n = self.vertex_count;
        let mut adj = vec![false; n * n];
        for &[a, b, c] in &self.edges {
            for (u, v) in [(a, b), (a, c), (b, c)] {
                adj[u * n + v] = true;
                adj[v * n + u] = true;
            }
        }
        adj
    }

    /// Hop count over co-occurrence adjacency; `None` when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, HypergraphError> {
        let n = self.vertex_count;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(HypergraphError::VertexOutOfRange { vertex, vertex_count: n });
            }
        }
        if u == v {
            return Err(HypergraphError::SameVertex(u));
        }
        let adj = self.co_occurrence();
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            for x in 0..n {
                if adj[w * n + x] && dist[x] == usize::MAX {
                    dist[x] = dist[w] + 1;
                    if x == v {
                        return Ok(Some(dist[x]));
                    }
                    queue.push_back(x);
                }
            }
        }
        Ok(None)
    }

    /// First vertex pair (lexicographic) that does not share an edge.
    pub fn first_non_adjacent_pair(&self) -> Option<(usize, usize)> {
        let n = self.vertex_count;
        let adj = self.co_occurrence();
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !adj[u * n + v])
    }
}

/// Per-vertex degrees under both readings, plus the edge sizes (D_e diagonal).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeData {
    pub directed_degree: Vec<usize>,
    pub support_degree: Vec<usize>,
    pub edge_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatingHypergraph {
    source: Loop,
    directed: Vec<DirectedHyperedge>,
    support: Hypergraph,
    multiplicity: Vec<u8>,
}

impl AssociatingHypergraph {
    /// Scans all ordered triples of distinct elements and keeps those that associate.
    pub fn build(source: &Loop) -> Self {
        let n = source.order();
        let mut directed = Vec::new();
        for x in 0..n {
            for y in (0..n).filter(|&y| y != x) {
                for z in (0..n).filter(|&z| z != x && z != y) {
                    if source.associates_unchecked(x, y, z) {
                        directed.push(DirectedHyperedge { triple: [x, y, z] });
                    }
                }
            }
        }
        let mut sets: Vec<[usize; 3]> = directed.iter().map(DirectedHyperedge::support).collect();
        sets.sort_unstable();
        let mut edges: Vec<[usize; 3]> = Vec::new();
        let mut multiplicity: Vec<u8> = Vec::new();
        for s in sets {
            if edges.last() == Some(&s) {
                *multiplicity.last_mut().unwrap() += 1;
            } else {
                edges.push(s);
                multiplicity.push(1);
            }
        }
        let support = Hypergraph { vertex_count: n, edges };
        Self { source: source.clone(), directed, support, multiplicity }
    }

    pub fn source(&self) -> &Loop {
        &self.source
    }

    pub fn vertex_count(&self) -> usize {
        self.support.vertex_count
    }

    pub fn directed_edges(&self) -> &[DirectedHyperedge] {
        &self.directed
    }

    pub fn support(&self) -> &Hypergraph {
        &self.support
    }

    /// Orderings present for each support edge, aligned with `support().edges()`.
    pub fn multiplicity(&self) -> &[u8] {
        &self.multiplicity
    }

    pub fn degrees(&self) -> DegreeData {
        let mut directed_degree = vec![0; self.vertex_count()];
        for e in &self.directed {
            for &v in &e.triple {
                directed_degree[v] += 1;
            }
        }
        DegreeData {
            directed_degree,
            support_degree: self.support.degrees(),
            edge_sizes: vec![3; self.support.edge_count()],
        }
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, HypergraphError> {
        self.support.distance(u, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{builtin_order5_loop, dihedral_group, moufang_extension, validate_loop};

    fn md(n: usize) -> AssociatingHypergraph {
        let (g, _) = dihedral_group(n).unwrap();
        AssociatingHypergraph::build(&moufang_extension(&g))
    }

    #[test]
    fn group_has_every_distinct_triple() {
        let (g, _) = dihedral_group(3).unwrap();
        let h = AssociatingHypergraph::build(&g.to_loop());
        // 6 * C(6,3)
        assert_eq!(h.directed_edges().len(), 120);
        assert_eq!(h.support().edge_count(), 20);
        assert!(h.multiplicity().iter().all(|&m| m == 6));
        let d = h.degrees();
        // 3 * (m-1)(m-2) with m = 6
        assert!(d.directed_degree.iter().all(|&x| x == 60));
    }

    #[test]
    fn moufang_d3_edge_count_by_brute_force() {
        let h = md(3);
        let l = h.source();
        // independent rescan of all 12^3 ordered triples
        let mut count = 0;
        for x in 0..12 {
            for y in 0..12 {
                for z in 0..12 {
                    if x != y && y != z && x != z && l.product(l.product(x, y), z) == l.product(x, l.product(y, z)) {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 564);
        assert_eq!(h.directed_edges().len(), 564);
        assert_eq!(h.vertex_count(), 12);
    }

    #[test]
    fn order5_contains_documented_triples() {
        let h = AssociatingHypergraph::build(&builtin_order5_loop());
        let has = |t: [usize; 3]| h.directed_edges().binary_search(&DirectedHyperedge { triple: t }).is_ok();
        assert!(has([1, 2, 3]));
        assert!(!has([1, 3, 2]));
    }

    #[test]
    fn directed_edges_are_sorted_and_associate() {
        for n in 3..=4 {
            let h = md(n);
            let l = h.source();
            assert!(h.directed_edges().windows(2).all(|w| w[0] < w[1]));
            let mut edges = h.directed_edges().iter().peekable();
            let v = h.vertex_count();
            for x in 0..v {
                for y in 0..v {
                    for z in 0..v {
                        if x == y || y == z || x == z {
                            continue;
                        }
                        let listed = edges.peek().map(|e| e.triple) == Some([x, y, z]);
                        if listed {
                            edges.next();
                        }
                        assert_eq!(listed, l.associates(x, y, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicities_and_degree_sums() {
        let h = md(4);
        let total: usize = h.multiplicity().iter().map(|&m| m as usize).sum();
        assert_eq!(total, h.directed_edges().len());
        assert!(h.multiplicity().iter().all(|&m| (1..=6).contains(&m)));
        let d = h.degrees();
        assert_eq!(d.directed_degree.iter().sum::<usize>(), 3 * h.directed_edges().len());
        assert_eq!(d.support_degree.iter().sum::<usize>(), 3 * h.support().edge_count());
        assert!(d.edge_sizes.iter().all(|&s| s == 3));
        for e in h.directed_edges() {
            assert!(h.support().edges().binary_search(&e.support()).is_ok());
        }
    }

    #[test]
    fn empty_edge_loop_has_zero_degrees() {
        // Z_2: no three distinct elements exist
        let h = AssociatingHypergraph::build(&validate_loop(&[[0, 1], [1, 0]], 0).unwrap());
        assert_eq!(h.directed_edges().len(), 0);
        assert_eq!(h.degrees().directed_degree, vec![0, 0]);
        assert_eq!(h.distance(0, 1), Ok(None));
    }

    #[test]
    fn all_pairs_distance_one() {
        for n in 3..=5 {
            let h = md(n);
            assert_eq!(h.support().first_non_adjacent_pair(), None, "n={n}");
        }
        let h = md(3);
        for u in 0..12 {
            for v in (0..12).filter(|&v| v != u) {
                assert_eq!(h.distance(u, v), Ok(Some(1)));
            }
        }
    }

    #[test]
    fn synthetic_distances() {
        let h = Hypergraph::new(6, [[0, 1, 2], [2, 3, 4]]).unwrap();
        assert_eq!(h.distance(0, 3), Ok(Some(2)));
        assert_eq!(h.distance(0, 1), Ok(Some(1)));
        assert_eq!(h.distance(0, 5), Ok(None));
        assert_eq!(h.distance(2, 2), Err(HypergraphError::SameVertex(2)));
        assert!(h.distance(0, 9).is_err());
        assert_eq!(h.first_non_adjacent_pair(), Some((0, 3)));
    }

    #[test]
    fn hypergraph_new_validates() {
        assert!(matches!(Hypergraph::new(3, [[0, 0, 1]]), Err(HypergraphError::RepeatedVertex { .. })));
        assert!(matches!(Hypergraph::new(3, [[0, 1, 3]]), Err(HypergraphError::VertexOutOfRange { vertex: 3, .. })));
        let h = Hypergraph::new(4, [[2, 1, 0], [0, 1, 2], [3, 1, 2]]).unwrap();
        assert_eq!(h.edges(), &[[0, 1, 2], [1, 2, 3]]);
        assert_eq!(h.incident_edges(3).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn build_is_deterministic() {
        assert_eq!(md(3), md(3));
    }
}
