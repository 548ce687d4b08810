//! Simple undirected graphs with optional pair multiplicities.

use std::collections::BTreeMap;

use crate::bitset::BitSet;

/// Undirected graph on `0..vertex_count`. Each stored pair `(u, v)` has
/// `u < v` and a multiplicity of at least one.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    vertex_count: usize,
    pairs: BTreeMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            pairs: BTreeMap::new(),
        }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds one to the multiplicity of `{u, v}`.
    ///
    /// Panics on a self-loop or an endpoint outside the vertex range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.add_edge_with_multiplicity(u, v, 1);
    }

    pub fn add_edge_with_multiplicity(&mut self, u: usize, v: usize, k: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(
            u < self.vertex_count && v < self.vertex_count,
            "endpoint out of range"
        );
        if k == 0 {
            return;
        }
        *self.pairs.entry((u.min(v), u.max(v))).or_insert(0) += k;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of distinct adjacent pairs.
    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    /// Distinct pairs in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.keys().copied()
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.values().copied()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.pairs.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Drops multiplicities: every stored pair gets multiplicity one.
    pub fn simple_projection(&self) -> Graph {
        Graph {
            vertex_count: self.vertex_count,
            pairs: self.pairs.keys().map(|&p| (p, 1)).collect(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.pairs
            .keys()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degree_with_multiplicity(&self, v: usize) -> usize {
        self.pairs
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &k)| k)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in self.pairs.keys() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn adjacency(&self) -> Vec<BitSet> {
        let mut adj = vec![BitSet::with_capacity(self.vertex_count); self.vertex_count];
        for &(u, v) in self.pairs.keys() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in adj[v].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Every two distinct vertices adjacent. Vacuously true below two vertices.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count;
        self.pairs.len() == n * n.saturating_sub(1) / 2
    }

    /// Connected, 2-regular, odd number (at least three) of vertices.
    pub fn is_odd_cycle(&self) -> bool {
        let n = self.vertex_count;
        n >= 3
            && n % 2 == 1
            && self.degrees().iter().all(|&d| d == 2)
            && self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (&(u, v), &k) in &self.pairs {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                g.add_edge_with_multiplicity(pos[u], pos[v], k);
            }
        }
        g
    }
}
