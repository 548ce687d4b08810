//! The hypergraph data model: vertices `0..n`, an ordered list of edges.
//!
//! Edges are kept as sorted vertex lists with a bitset mirror for
//! intersection tests. Duplicate edges, rank-1 edges and isolated vertices
//! are all representable; whether they are acceptable is a question for
//! [`Hypergraph::validate`] and the individual predicates.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("edge {edge} contains vertex {vertex}, outside 0..{n}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("edge index {edge} out of range (m = {m})")]
    EdgeOutOfRange { edge: usize, m: usize },
}

#[derive(Clone, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    masks: Vec<BitSet>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Builds a hypergraph on `n` vertices. Each edge is sorted; out-of-range
    /// or repeated vertices are rejected. Use [`validate_raw`] to get a full
    /// report instead of the first error.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut edge) in edges.into_iter().enumerate() {
            edge.sort_unstable();
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange {
                    edge: i,
                    vertex: v,
                    n,
                });
            }
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex {
                    edge: i,
                    vertex: w[0],
                });
            }
            sorted.push(edge);
        }
        Ok(Self::from_sorted(n, sorted))
    }

    fn from_sorted(n: usize, edges: Vec<Vec<usize>>) -> Self {
        let masks = edges
            .iter()
            .map(|e| BitSet::from_indices(n, e.iter().copied()))
            .collect();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        Self {
            n,
            edges,
            masks,
            incidence,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    pub fn edge_mask(&self, e: usize) -> &BitSet {
        &self.masks[e]
    }

    /// Edge positions containing vertex `x`, in increasing order.
    pub fn incident_edges(&self, x: usize) -> &[usize] {
        &self.incidence[x]
    }

    pub fn rank(&self, e: usize) -> usize {
        self.edges[e].len()
    }

    pub fn degree(&self, x: usize) -> usize {
        self.incidence[x].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.edges.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_rank(&self) -> usize {
        self.edges.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn intersection_len(&self, e: usize, f: usize) -> usize {
        self.masks[e].intersection_len(&self.masks[f])
    }

    pub fn meets(&self, e: usize, f: usize) -> bool {
        self.masks[e].intersects(&self.masks[f])
    }

    /// True iff every two edge positions share at most one vertex.
    pub fn is_linear(&self) -> bool {
        (0..self.m()).all(|e| (e + 1..self.m()).all(|f| self.intersection_len(e, f) <= 1))
    }

    pub fn is_uniform(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_regular(&self) -> bool {
        self.incidence.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn has_rank_below(&self, rank: usize) -> bool {
        self.edges.iter().any(|e| e.len() < rank)
    }

    /// The transpose: one vertex per edge, one edge per vertex. Isolated
    /// vertices become empty edges and are kept.
    pub fn dual(&self) -> Hypergraph {
        Self::from_sorted(self.m(), self.incidence.clone())
    }

    /// Drops isolated vertices, renumbering the rest in order. Edge order is
    /// kept.
    pub fn without_isolated(&self) -> Hypergraph {
        let mut new_index = vec![usize::MAX; self.n];
        let mut next = 0;
        for (x, slot) in new_index.iter_mut().enumerate() {
            if !self.incidence[x].is_empty() {
                *slot = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&x| new_index[x]).collect())
            .collect();
        Self::from_sorted(next, edges)
    }

    /// `H \ e`: drops edge position `e`, keeps every vertex.
    pub fn without_edge(&self, e: usize) -> Result<Hypergraph, HypergraphError> {
        if e >= self.m() {
            return Err(HypergraphError::EdgeOutOfRange {
                edge: e,
                m: self.m(),
            });
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, edge)| edge.clone())
            .collect();
        Ok(Self::from_sorted(self.n, edges))
    }

    /// Keeps the edges selected by `keep`, on the same vertex set. Returns the
    /// sub-hypergraph and the original position of every kept edge.
    pub fn filter_edges(
        &self,
        mut keep: impl FnMut(usize, &[usize]) -> bool,
    ) -> (Hypergraph, Vec<usize>) {
        let mut index = Vec::new();
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if keep(i, e) {
                index.push(i);
                edges.push(e.clone());
            }
        }
        (Self::from_sorted(self.n, edges), index)
    }

    /// Vertex relabeling: vertex `x` becomes `perm[x]`. Edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph, HypergraphError> {
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        Self::new(self.n, edges)
    }

    /// Line graph: one vertex per edge, adjacency iff the edges meet, with
    /// multiplicity `|e ∩ f|`.
    pub fn line_graph(&self) -> Graph {
        let mut g = Graph::new(self.m());
        for e in 0..self.m() {
            for f in e + 1..self.m() {
                let k = self.intersection_len(e, f);
                if k > 0 {
                    g.add_edge_with_multiplicity(e, f, k);
                }
            }
        }
        g
    }

    /// Clique graph: same vertices, each edge contributes a clique. The
    /// multiplicity of `{x, y}` is the number of edges containing both.
    pub fn clique_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for e in &self.edges {
            for (i, &x) in e.iter().enumerate() {
                for &y in &e[i + 1..] {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }

    /// Structural report on this hypergraph. Vertex-range and repeat checks
    /// hold by construction, so only rank and duplication issues can appear.
    pub fn validate(&self) -> ValidationReport {
        validate_raw(self.n, &self.edges)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// `(edge, vertex)` pairs with `vertex >= n`.
    pub out_of_range: Vec<(usize, usize)>,
    /// `(edge, vertex)` pairs where a vertex is listed twice in one edge.
    pub repeated_vertices: Vec<(usize, usize)>,
    /// Rank-0 edges; rejected.
    pub empty_edges: Vec<usize>,
    /// Rank-1 edges; allowed but excluded by every bound under test.
    pub rank_one_edges: Vec<usize>,
    /// `(first, later)` positions of edges with identical vertex sets.
    pub duplicate_edges: Vec<(usize, usize)>,
}

impl ValidationReport {
    /// No issue of any kind.
    pub fn is_clean(&self) -> bool {
        self.is_well_formed() && self.rank_one_edges.is_empty() && self.duplicate_edges.is_empty()
    }

    /// No index-range violations, repeats or empty edges.
    pub fn is_well_formed(&self) -> bool {
        self.out_of_range.is_empty()
            && self.repeated_vertices.is_empty()
            && self.empty_edges.is_empty()
    }
}

/// Validates an unchecked edge list against `n` vertices.
pub fn validate_raw(n: usize, edges: &[Vec<usize>]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for (i, edge) in edges.iter().enumerate() {
        for &v in edge {
            if v >= n {
                report.out_of_range.push((i, v));
            }
        }
        let mut sorted = edge.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                report.repeated_vertices.push((i, w[0]));
            }
        }
        sorted.dedup();
        match sorted.len() {
            0 => report.empty_edges.push(i),
            1 => report.rank_one_edges.push(i),
            _ => {}
        }
        match seen.get(&sorted) {
            Some(&first) => report.duplicate_edges.push((first, i)),
            None => {
                seen.insert(sorted, i);
            }
        }
    }
    report
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Hypergraph;

    pub fn fano() -> Hypergraph {
        Hypergraph::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap()
    }

    pub fn triangle() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    pub fn path() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap()
    }

    pub fn disjoint(m: usize) -> Hypergraph {
        Hypergraph::new(2 * m, (0..m).map(|i| vec![2 * i, 2 * i + 1]).collect()).unwrap()
    }
}
