//! Edge colorings: validation, first-fit, exact chromatic index and exact
//! list edge coloring of graphs.

mod exact;
mod list;

pub use exact::{exact_chromatic_index, ExactColoring, SearchStats, DEFAULT_BUDGET};
pub use list::{list_edge_color, ColorLists};

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has {found} entries but the hypergraph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("order is not a permutation of 0..{m}")]
    InvalidOrder { m: usize },
    #[error("{lists} color lists given for {edges} graph edges")]
    ListCountMismatch { edges: usize, lists: usize },
    #[error("search budget of {budget} nodes exceeded (best known {upper}, lower bound {lower})")]
    BudgetExceeded {
        budget: u64,
        lower: usize,
        upper: usize,
    },
}

/// Assignment of a color index to every edge position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

impl Coloring {
    /// Palette sized to the colors actually used (`max + 1`).
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette_size = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        Self {
            colors,
            palette_size,
        }
    }

    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// True iff every color is below the palette size and same-colored edges are
/// disjoint.
pub fn validate_coloring(h: &Hypergraph, coloring: &Coloring) -> Result<bool, ColoringError> {
    if coloring.colors.len() != h.m() {
        return Err(ColoringError::LengthMismatch {
            expected: h.m(),
            found: coloring.colors.len(),
        });
    }
    if coloring.colors.iter().any(|&c| c >= coloring.palette_size) {
        return Ok(false);
    }
    for e in 0..h.m() {
        for f in e + 1..h.m() {
            if coloring.colors[e] == coloring.colors[f] && h.meets(e, f) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Line-graph adjacency as bitsets over edge positions.
pub(crate) fn conflict_sets(h: &Hypergraph) -> Vec<BitSet> {
    let m = h.m();
    let mut adj = vec![BitSet::with_capacity(m); m];
    for e in 0..m {
        for f in e + 1..m {
            if h.meets(e, f) {
                adj[e].insert(f);
                adj[f].insert(e);
            }
        }
    }
    adj
}

/// First-fit in edge position order.
pub fn greedy_color(h: &Hypergraph) -> Coloring {
    let order: Vec<usize> = (0..h.m()).collect();
    greedy_color_in_order(h, &order).expect("identity order")
}

/// First-fit along `order`, which must be a permutation of the edge
/// positions. Uses at most `max_e R(e) + 1` colors.
pub fn greedy_color_in_order(h: &Hypergraph, order: &[usize]) -> Result<Coloring, ColoringError> {
    let m = h.m();
    let mut seen = vec![false; m];
    if order.len() != m
        || order
            .iter()
            .any(|&e| e >= m || std::mem::replace(&mut seen[e], true))
    {
        return Err(ColoringError::InvalidOrder { m });
    }
    let adj = conflict_sets(h);
    let mut colors = vec![usize::MAX; m];
    let mut taken = Vec::new();
    for &e in order {
        taken.clear();
        taken.extend(
            adj[e]
                .iter()
                .map(|f| colors[f])
                .filter(|&c| c != usize::MAX),
        );
        taken.sort_unstable();
        taken.dedup();
        let c = taken
            .iter()
            .enumerate()
            .find(|&(i, &c)| i != c)
            .map_or(taken.len(), |(i, _)| i);
        colors[e] = c;
    }
    Ok(Coloring::from_colors(colors))
}

/// `max(Δ, |S|)` where `S` is a pairwise-intersecting edge set grown greedily
/// from each start edge. Never exceeds the chromatic index.
pub fn clique_lower_bound(h: &Hypergraph) -> usize {
    let adj = conflict_sets(h);
    greedy_clique(&adj).len().max(h.max_degree())
}

pub(crate) fn greedy_clique(adj: &[BitSet]) -> Vec<usize> {
    let m = adj.len();
    let mut by_degree: Vec<usize> = (0..m).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let mut best = Vec::new();
    for &start in &by_degree {
        if adj[start].len() < best.len() {
            break;
        }
        let mut clique = vec![start];
        let mut candidates = adj[start].clone();
        for &v in &by_degree {
            if candidates.contains(v) {
                clique.push(v);
                candidates.intersect_with(&adj[v]);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}
