//! Splitting a hypergraph into its rank ≥ 3 layer `H3` and rank-2 graph
//! `H2`, and extending an `n`-coloring of `H3` to all of `H` by exact list
//! edge coloring of `H2`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::ConjectureError;
use crate::coloring::{list_edge_color, validate_coloring, ColorLists, Coloring};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerSplit {
    /// Rank ≥ 3 edges on the full vertex set.
    pub h3: Hypergraph,
    /// Position in `H` of each `h3` edge.
    pub h3_edges: Vec<usize>,
    /// Simple graph of the rank-2 edges.
    pub h2: Graph,
    /// Position in `H` of each `h2` edge, in [`Graph::edges`] order.
    pub h2_edges: Vec<usize>,
}

pub fn split_h3_h2(h: &Hypergraph) -> Result<LayerSplit, ConjectureError> {
    if h.has_rank_below(2) {
        return Err(ConjectureError::NotApplicable("edges of rank below 2"));
    }
    let (h3, h3_edges) = h.filter_edges(|_, e| e.len() >= 3);
    let mut first_at: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        if e.len() == 2 {
            first_at.entry((e[0], e[1])).or_insert(i);
        }
    }
    let h2 = Graph::from_edges(h.n(), first_at.keys().copied());
    let h2_edges = h2.edges().map(|p| first_at[&p]).collect();
    Ok(LayerSplit {
        h3,
        h3_edges,
        h2,
        h2_edges,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub palette: usize,
    /// Colors left for each `H2` edge after the `H3` coloring, in
    /// [`Graph::edges`] order.
    pub lists: ColorLists,
    pub min_list_len: Option<usize>,
    pub h2_max_degree: usize,
    /// Combined coloring of `H` if the list instance is solvable.
    pub coloring: Option<Coloring>,
}

impl ExtensionReport {
    /// Every list has at least `Δ(H2) + 1` colors.
    pub fn lists_exceed_degree(&self) -> bool {
        self.min_list_len.is_none_or(|k| k > self.h2_max_degree)
    }
}

/// Extends `base`, a coloring of the `H3` layer (indexed like
/// [`LayerSplit::h3`]) with colors below `n`, to an `n`-coloring of `H`.
/// Each rank-2 edge `{x, y}` may use any color not already present on an
/// `H3` edge at `x` or at `y`; the resulting list instance is solved
/// exactly.
pub fn extend_coloring(
    h: &Hypergraph,
    base: &Coloring,
) -> Result<ExtensionReport, ConjectureError> {
    if !h.is_linear() {
        return Err(ConjectureError::NotApplicable("not linear"));
    }
    let palette = h.n();
    let split = split_h3_h2(h)?;
    let valid = base.colors.iter().all(|&c| c < palette)
        && validate_coloring(&split.h3, base)
            .map_err(|_| ConjectureError::InvalidBaseColoring { palette })?;
    if !valid {
        return Err(ConjectureError::InvalidBaseColoring { palette });
    }

    let mut used_at = vec![vec![false; palette]; h.n()];
    for (i, e) in split.h3.edges().iter().enumerate() {
        for &x in e {
            used_at[x][base.colors[i]] = true;
        }
    }
    let lists = ColorLists::new(
        split
            .h2
            .edges()
            .map(|(x, y)| {
                (0..palette)
                    .filter(|&c| !used_at[x][c] && !used_at[y][c])
                    .collect()
            })
            .collect(),
    );
    let solved = list_edge_color(&split.h2, &lists).expect("one list per edge");
    let coloring = solved.map(|h2_colors| {
        let mut colors = vec![0; h.m()];
        for (i, &orig) in split.h3_edges.iter().enumerate() {
            colors[orig] = base.colors[i];
        }
        for (i, &orig) in split.h2_edges.iter().enumerate() {
            colors[orig] = h2_colors[i];
        }
        Coloring {
            colors,
            palette_size: palette,
        }
    });
    if let Some(c) = &coloring {
        debug_assert!(validate_coloring(h, c).unwrap());
    }
    Ok(ExtensionReport {
        palette,
        min_list_len: lists.min_len(),
        h2_max_degree: split.h2.max_degree(),
        lists,
        coloring,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficitExcess {
    /// `Δ(H3)`.
    pub h3_max_degree: usize,
    /// `Δ(H3) − d_{H3}(x)`.
    pub deficit: Vec<usize>,
    /// `Σ_{k≥4} (k − 3)·d_k(x)`.
    pub excess: Vec<usize>,
    /// `d_k(x)`: number of rank-`k` edges at `x`, for every rank present.
    pub rank_counts: Vec<BTreeMap<usize, usize>>,
    /// `excess(x) ≥ 2·deficit(x)` at every vertex.
    pub hypothesis_holds: bool,
}

pub fn deficit_excess(h: &Hypergraph) -> DeficitExcess {
    let rank_counts: Vec<BTreeMap<usize, usize>> = (0..h.n())
        .map(|x| {
            let mut counts = BTreeMap::new();
            for &e in h.incident_edges(x) {
                *counts.entry(h.rank(e)).or_insert(0) += 1;
            }
            counts
        })
        .collect();
    let h3_degree: Vec<usize> = rank_counts
        .iter()
        .map(|c| c.range(3..).map(|(_, &d)| d).sum())
        .collect();
    let h3_max_degree = h3_degree.iter().copied().max().unwrap_or(0);
    let deficit: Vec<usize> = h3_degree.iter().map(|&d| h3_max_degree - d).collect();
    let excess: Vec<usize> = rank_counts
        .iter()
        .map(|c| c.range(4..).map(|(&k, &d)| (k - 3) * d).sum())
        .collect();
    let hypothesis_holds = excess.iter().zip(&deficit).all(|(&e, &d)| e >= 2 * d);
    DeficitExcess {
        h3_max_degree,
        deficit,
        excess,
        rank_counts,
        hypothesis_holds,
    }
}

/// `Δ(H2) ≤ n − 2Δ(H3) − 1`.
pub fn h2_degree_fits_palette(h: &Hypergraph) -> bool {
    let Ok(split) = split_h3_h2(h) else {
        return false;
    };
    (split.h2.max_degree() as i64) < h.n() as i64 - 2 * split.h3.max_degree() as i64
}

/// `D(x, H3) ≥ 2Δ(H3)` at every vertex.
pub fn h3_clique_degree_dominates(h: &Hypergraph) -> bool {
    let Ok(split) = split_h3_h2(h) else {
        return false;
    };
    let delta = split.h3.max_degree();
    (0..h.n()).all(|x| {
        let d: usize = split
            .h3
            .incident_edges(x)
            .iter()
            .map(|&e| split.h3.rank(e) - 1)
            .sum();
        d >= 2 * delta
    })
}

/// `H3` is regular on the full vertex set.
pub fn h3_is_regular(h: &Hypergraph) -> bool {
    split_h3_h2(h).is_ok_and(|s| s.h3.is_regular())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;

    #[test]
    fn splits() {
        let s = split_h3_h2(&fano()).unwrap();
        assert_eq!(s.h3, fano());
        assert_eq!(s.h2.edge_count(), 0);

        let s = split_h3_h2(&triangle()).unwrap();
        assert_eq!(s.h3.m(), 0);
        assert_eq!(s.h2.edge_count(), 3);

        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![3, 4]]).unwrap();
        let s = split_h3_h2(&h).unwrap();
        assert_eq!((s.h3.m(), s.h3_edges.clone()), (1, vec![0]));
        assert_eq!((s.h2.edge_count(), s.h2_edges.clone()), (1, vec![1]));
    }

    #[test]
    fn extension_of_disjoint_layers() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![3, 4]]).unwrap();
        let r = extend_coloring(
            &h,
            &Coloring {
                colors: vec![0],
                palette_size: 5,
            },
        )
        .unwrap();
        assert_eq!(r.lists.get(0), &[0, 1, 2, 3, 4]);
        let c = r.coloring.unwrap();
        assert!(validate_coloring(&h, &c).unwrap());
        assert_eq!(c.colors, vec![0, 0]);
    }

    #[test]
    fn lists_exclude_h3_colors_at_both_ends() {
        // Two 3-edges on a 7-vertex set, a rank-2 edge joining them.
        let h = Hypergraph::new(7, vec![vec![0, 1, 2], vec![3, 4, 5], vec![2, 3]]).unwrap();
        let r = extend_coloring(
            &h,
            &Coloring {
                colors: vec![0, 1],
                palette_size: 7,
            },
        )
        .unwrap();
        assert_eq!(r.lists.get(0), &[2, 3, 4, 5, 6]);
        assert_eq!(r.coloring.unwrap().colors, vec![0, 1, 2]);
    }

    #[test]
    fn invalid_base() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let bad = Coloring {
            colors: vec![0, 0],
            palette_size: 5,
        };
        assert!(matches!(
            extend_coloring(&h, &bad),
            Err(ConjectureError::InvalidBaseColoring { .. })
        ));
        let too_big = Coloring {
            colors: vec![0, 9],
            palette_size: 10,
        };
        assert!(extend_coloring(&h, &too_big).is_err());
    }

    #[test]
    fn deficits_and_excesses() {
        // x = 0 sits on two rank-4 edges; Δ(H3) = 2.
        let h = Hypergraph::new(7, vec![vec![0, 1, 2, 3], vec![0, 4, 5, 6]]).unwrap();
        let de = deficit_excess(&h);
        assert_eq!((de.deficit[0], de.excess[0]), (0, 2));
        assert_eq!((de.deficit[1], de.excess[1]), (1, 1));
        assert!(!de.hypothesis_holds);

        // x = 0 on one rank-3 edge while Δ(H3) = 2 elsewhere.
        let h = Hypergraph::new(7, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]]).unwrap();
        let de = deficit_excess(&h);
        assert_eq!((de.h3_max_degree, de.deficit[0], de.excess[0]), (2, 1, 0));
        assert!(!de.hypothesis_holds);

        let de = deficit_excess(&fano());
        assert!(de.deficit.iter().all(|&d| d == 0));
        assert!(de.excess.iter().all(|&e| e == 0));
        assert!(de.hypothesis_holds);
    }

    #[test]
    fn layer_predicates() {
        assert!(h3_is_regular(&fano()));
        assert!(h3_clique_degree_dominates(&fano()));
        // Fano: Δ(H2) = 0 ≤ 7 − 6 − 1.
        assert!(h2_degree_fits_palette(&fano()));
        assert!(!h3_clique_degree_dominates(
            &Hypergraph::new(5, vec![vec![0, 1, 2], vec![3, 4]]).unwrap()
        ));
    }
}
