//! Necessary conditions on a minimal counterexample to the `k + 1` bound.

use serde::Serialize;

use super::ConjectureError;
use crate::coloring::exact_chromatic_index;
use crate::design::is_bibd;
use crate::hypergraph::Hypergraph;
use crate::stats::{clique_rank, max_clique_degree};

/// Which BIBD is set aside before looking for critical hypergraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExclusionVariant {
    /// `(T² − T + 1, T, 1)` with `T = P`, matching the C5 exception.
    PlaneParameters,
    /// `(P² − P, P, 1)`, one point fewer.
    OnePointFewer,
}

pub fn is_excluded_bibd(h: &Hypergraph, variant: ExclusionVariant) -> bool {
    let p = h.max_rank();
    let v = match variant {
        ExclusionVariant::PlaneParameters => p * p - p + 1,
        ExclusionVariant::OnePointFewer => p * p - p,
    };
    is_bibd(&h.without_isolated()).is_some_and(|d| d.v == v && d.r == p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCriticality {
    pub edge: usize,
    /// `D(H \ e)`.
    pub d_without: usize,
    /// `q(H \ e)`.
    pub q_without: usize,
    /// `R(e)`.
    pub clique_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub q: usize,
    /// `D(H)`.
    pub d: usize,
    /// (i) `q(H) > D(H)`.
    pub exceeds_d: bool,
    /// (ii) `D(H \ e) = D(H)` for every edge.
    pub d_stable: bool,
    /// (iii) `q(H \ e) = D(H)` for every edge.
    pub q_drops_to_d: bool,
    /// (iv) `R(e) ≥ D(H)` for every edge.
    pub clique_rank_at_least_d: bool,
    pub edges: Vec<EdgeCriticality>,
    pub excluded_plane_parameters: bool,
    pub excluded_one_point_fewer: bool,
}

impl CriticalityReport {
    pub fn all_hold(&self) -> bool {
        self.exceeds_d && self.d_stable && self.q_drops_to_d && self.clique_rank_at_least_d
    }
}

/// Evaluates the four conditions, solving `H` and every `H \ e` exactly.
/// `H \ e` keeps all vertices.
pub fn critical_check(h: &Hypergraph, budget: u64) -> Result<CriticalityReport, ConjectureError> {
    if h.has_rank_below(2) {
        return Err(ConjectureError::NotApplicable("edges of rank below 2"));
    }
    if !h.is_linear() {
        return Err(ConjectureError::NotApplicable("not linear"));
    }
    if h.max_rank() < 3 {
        return Err(ConjectureError::NotApplicable("maximum rank below 3"));
    }
    let q = exact_chromatic_index(h, budget)?.q;
    let d = max_clique_degree(h);
    let mut edges = Vec::with_capacity(h.m());
    for e in 0..h.m() {
        let sub = h.without_edge(e).expect("edge in range");
        edges.push(EdgeCriticality {
            edge: e,
            d_without: max_clique_degree(&sub),
            q_without: exact_chromatic_index(&sub, budget)?.q,
            clique_rank: clique_rank(h, e),
        });
    }
    Ok(CriticalityReport {
        q,
        d,
        exceeds_d: q > d,
        d_stable: edges.iter().all(|x| x.d_without == d),
        q_drops_to_d: edges.iter().all(|x| x.q_without == d),
        clique_rank_at_least_d: edges.iter().all(|x| x.clique_rank >= d),
        edges,
        excluded_plane_parameters: is_excluded_bibd(h, ExclusionVariant::PlaneParameters),
        excluded_one_point_fewer: is_excluded_bibd(h, ExclusionVariant::OnePointFewer),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::DEFAULT_BUDGET;
    use crate::hypergraph::fixtures::*;

    #[test]
    fn fano_meets_all_four() {
        let r = critical_check(&fano(), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.q, r.d), (7, 6));
        assert!(r.exceeds_d && r.d_stable && r.q_drops_to_d && r.clique_rank_at_least_d);
        assert!(r
            .edges
            .iter()
            .all(|e| e.q_without == 6 && e.d_without == 6 && e.clique_rank == 6));
        assert!(r.excluded_plane_parameters);
        assert!(!r.excluded_one_point_fewer);
    }

    #[test]
    fn rank_three_path_fails_first_condition() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let r = critical_check(&h, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.q, r.d), (2, 4));
        assert!(!r.exceeds_d);
    }

    #[test]
    fn single_edge_fails_first_condition() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let r = critical_check(&h, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.q, r.d, r.exceeds_d), (1, 2, false));
    }

    #[test]
    fn hypotheses_enforced() {
        assert!(matches!(
            critical_check(&triangle(), 100),
            Err(ConjectureError::NotApplicable(_))
        ));
    }
}
