//! Degree and rank statistics, clique degree `D(x)`, clique rank `R(e)`,
//! and triangle counts around an edge.

use serde::Serialize;

use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatsProfile {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub min_rank: usize,
    pub max_rank: usize,
    pub degrees: Vec<usize>,
    /// `D(x) = Σ_{e∋x} (r(e) − 1)`, the degree of `x` in the clique graph.
    pub clique_degrees: Vec<usize>,
    pub ranks: Vec<usize>,
    /// `R(e) = Σ_{x∈e} (d(x) − 1)`, the degree of `e` in the line graph.
    pub clique_ranks: Vec<usize>,
    /// `D(H) = max_x D(x)`.
    pub max_clique_degree: usize,
    pub max_clique_rank: usize,
}

/// Computes the full profile. Extremes over an empty set are reported as 0.
pub fn stats(h: &Hypergraph) -> StatsProfile {
    let degrees = h.degrees();
    let ranks = h.ranks();
    let clique_degrees: Vec<usize> = (0..h.n())
        .map(|x| h.incident_edges(x).iter().map(|&e| ranks[e] - 1).sum())
        .collect();
    let clique_ranks: Vec<usize> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&x| degrees[x] - 1).sum())
        .collect();
    assert_eq!(
        degrees.iter().sum::<usize>(),
        ranks.iter().sum::<usize>(),
        "degree sum must equal rank sum"
    );
    StatsProfile {
        n: h.n(),
        m: h.m(),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        min_rank: ranks.iter().copied().min().unwrap_or(0),
        max_rank: ranks.iter().copied().max().unwrap_or(0),
        max_clique_degree: clique_degrees.iter().copied().max().unwrap_or(0),
        max_clique_rank: clique_ranks.iter().copied().max().unwrap_or(0),
        degrees,
        clique_degrees,
        ranks,
        clique_ranks,
    }
}

/// `D(H) = max_x Σ_{e∋x} (r(e) − 1)`.
pub fn max_clique_degree(h: &Hypergraph) -> usize {
    (0..h.n())
        .map(|x| {
            h.incident_edges(x)
                .iter()
                .map(|&e| h.rank(e) - 1)
                .sum::<usize>()
        })
        .max()
        .unwrap_or(0)
}

/// `R(e)` for a single edge.
pub fn clique_rank(h: &Hypergraph, e: usize) -> usize {
    h.edge(e).iter().map(|&x| h.degree(x) - 1).sum()
}

pub fn max_clique_rank(h: &Hypergraph) -> usize {
    (0..h.m()).map(|e| clique_rank(h, e)).max().unwrap_or(0)
}

/// Triangles with side `e`, split by type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleCount {
    /// Pairs `{f, g}` sharing a common point with `e`.
    pub t1: usize,
    /// Pairs meeting `e` and each other pairwise at three distinct points.
    pub t2: usize,
    pub total: usize,
}

/// Counts unordered pairs `{f, g}` of other edge positions that form a
/// triangle with side `e`.
///
/// On a linear hypergraph `t1` is the closed form `Σ_{x∈e} C(d(x) − 1, 2)`;
/// otherwise a pair can share several points with `e` and the pairs are
/// counted directly.
pub fn count_triangles(h: &Hypergraph, e: usize) -> Result<TriangleCount, HypergraphError> {
    if e >= h.m() {
        return Err(HypergraphError::EdgeOutOfRange { edge: e, m: h.m() });
    }
    let neighbours: Vec<usize> = (0..h.m()).filter(|&f| f != e && h.meets(e, f)).collect();
    let linear = h.is_linear();

    let t1 = if linear {
        h.edge(e)
            .iter()
            .map(|&x| {
                let d = h.degree(x) - 1;
                d * d.saturating_sub(1) / 2
            })
            .sum()
    } else {
        let mut count = 0;
        for (i, &f) in neighbours.iter().enumerate() {
            for &g in &neighbours[i + 1..] {
                let mut common = h.edge_mask(e).clone();
                common.intersect_with(h.edge_mask(f));
                if common.intersects(h.edge_mask(g)) {
                    count += 1;
                }
            }
        }
        count
    };

    // Walk from each neighbour f (meeting e) to neighbours g that meet f
    // outside the common points of e and f; each triangle is reached twice.
    let mut t2_twice = 0;
    for &f in &neighbours {
        let mut ef = h.edge_mask(e).clone();
        ef.intersect_with(h.edge_mask(f));
        for &g in &neighbours {
            if g == f || !h.meets(f, g) || ef.intersects(h.edge_mask(g)) {
                continue;
            }
            t2_twice += 1;
        }
    }
    let t2 = t2_twice / 2;
    Ok(TriangleCount {
        t1,
        t2,
        total: t1 + t2,
    })
}
