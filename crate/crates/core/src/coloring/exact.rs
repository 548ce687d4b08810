//! Exact chromatic index by branch and bound on the line graph.
//!
//! Vertices (edges of the hypergraph) are branched in DSATUR order: most
//! distinct neighbour colors first, then higher line-graph degree, then
//! lower index. A greedily found clique is pre-colored `0..k`, and a vertex
//! may only open the color one above the current maximum.

use serde::Serialize;

use super::{conflict_sets, greedy_clique, Coloring, ColoringError};
use crate::bitset::BitSet;
use crate::hypergraph::Hypergraph;

/// Default node limit for the exact search.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub lower_bound: usize,
    pub initial_upper_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactColoring {
    pub q: usize,
    pub coloring: Coloring,
    pub stats: SearchStats,
}

const UNCOLORED: usize = usize::MAX;

struct Search<'a> {
    adj: &'a [BitSet],
    degree: Vec<usize>,
    colors: Vec<usize>,
    /// `neighbour_colors[v][c]`: colored neighbours of `v` holding `c`.
    neighbour_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    lower: usize,
    best: usize,
    best_colors: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [BitSet], palette: usize, budget: u64) -> Self {
        let m = adj.len();
        Self {
            adj,
            degree: adj.iter().map(BitSet::len).collect(),
            colors: vec![UNCOLORED; m],
            neighbour_colors: vec![vec![0; palette + 1]; m],
            saturation: vec![0; m],
            lower: 0,
            best: palette,
            best_colors: Vec::new(),
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for w in self.adj[v].iter() {
            let slot = &mut self.neighbour_colors[w][c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.colors[v], UNCOLORED);
        for w in self.adj[v].iter() {
            let slot = &mut self.neighbour_colors[w][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn select(&self) -> Option<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by(|&a, &b| {
                (self.saturation[a], self.degree[a])
                    .cmp(&(self.saturation[b], self.degree[b]))
                    .then(b.cmp(&a))
            })
    }

    fn first_free(&self, v: usize) -> usize {
        self.neighbour_colors[v]
            .iter()
            .position(|&k| k == 0)
            .unwrap()
    }

    /// Plain DSATUR: first free color for each selected vertex.
    fn greedy(&mut self) -> Vec<usize> {
        let mut order = Vec::new();
        while let Some(v) = self.select() {
            let c = self.first_free(v);
            self.assign(v, c);
            order.push(v);
        }
        let colors = self.colors.clone();
        for v in order.into_iter().rev() {
            self.unassign(v);
        }
        colors
    }

    /// `used` colors are in play; only colorings with fewer than `best`
    /// colors are explored.
    fn branch(&mut self, used: usize) {
        let Some(v) = self.select() else {
            self.best = used;
            self.best_colors = self.colors.clone();
            return;
        };
        let mut c = 0;
        while c < (used + 1).min(self.best - 1) {
            if self.neighbour_colors[v][c] == 0 {
                self.nodes += 1;
                if self.nodes > self.budget {
                    self.exhausted = true;
                    return;
                }
                self.assign(v, c);
                self.branch(used.max(c + 1));
                self.unassign(v);
                if self.exhausted || self.best <= self.lower {
                    return;
                }
            }
            c += 1;
        }
    }
}

/// Exact minimum number of colors with a witness coloring, or
/// [`ColoringError::BudgetExceeded`] once more than `budget` search nodes
/// have been expanded. Deterministic for a fixed input.
pub fn exact_chromatic_index(h: &Hypergraph, budget: u64) -> Result<ExactColoring, ColoringError> {
    let m = h.m();
    if m == 0 {
        return Ok(ExactColoring {
            q: 0,
            coloring: Coloring::from_colors(Vec::new()),
            stats: SearchStats {
                nodes_expanded: 0,
                lower_bound: 0,
                initial_upper_bound: 0,
            },
        });
    }
    let adj = conflict_sets(h);
    let clique = greedy_clique(&adj);
    let lower = clique.len().max(h.max_degree());

    let mut search = Search::new(&adj, m, budget);
    let greedy = search.greedy();
    let upper = greedy.iter().max().unwrap() + 1;
    search.best = upper;
    search.best_colors = greedy;
    search.lower = lower;

    if lower < upper {
        for (c, &v) in clique.iter().enumerate() {
            search.assign(v, c);
        }
        search.branch(clique.len());
        if search.exhausted {
            return Err(ColoringError::BudgetExceeded {
                budget,
                lower,
                upper: search.best,
            });
        }
    }

    let q = search.best;
    Ok(ExactColoring {
        q,
        coloring: Coloring {
            colors: search.best_colors,
            palette_size: q,
        },
        stats: SearchStats {
            nodes_expanded: search.nodes,
            lower_bound: lower,
            initial_upper_bound: upper,
        },
    })
}
