//! `n`-coloring by peeling low-rank edges.
//!
//! While some edge has `r(e)·(Δ − 1) < n` (with `Δ` the maximum degree of
//! what is left), remove it. Whatever remains is colored exactly. The peeled
//! edges are then put back in reverse order; each meets fewer than `n`
//! already-colored edges, so a free color below `n` always exists.

use serde::Serialize;

use crate::coloring::{exact_chromatic_index, Coloring, ColoringError};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "path", rename_all = "kebab-case")]
pub enum InductionPath {
    /// Every edge was peeled.
    PureInduction,
    /// `base_edges` edges had no low-rank edge to peel and were solved exactly.
    ExactBase { base_edges: usize, base_q: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionOutcome {
    /// Valid coloring with palette `n`, or `None` if the exact base needed
    /// more than `n` colors.
    pub coloring: Option<Coloring>,
    /// Edge positions in the order they were peeled.
    pub peeled: Vec<usize>,
    pub path: InductionPath,
    /// `n > (Δ − 1)²` or `n < ρ²` for the input.
    pub hypothesis_holds: bool,
}

/// `n > (Δ − 1)²` or `n < ρ²`.
pub fn induction_hypothesis(h: &Hypergraph) -> bool {
    let n = h.n();
    let delta = h.max_degree();
    let rho = h.min_rank();
    let dm1 = delta.saturating_sub(1);
    n > dm1 * dm1 || (h.m() > 0 && n < rho * rho)
}

pub fn color_by_rank_induction(
    h: &Hypergraph,
    budget: u64,
) -> Result<InductionOutcome, ColoringError> {
    let n = h.n();
    let m = h.m();
    let mut alive = vec![true; m];
    let mut degree = h.degrees();
    let mut peeled = Vec::new();

    loop {
        let delta = degree.iter().copied().max().unwrap_or(0);
        // r(e) < n / (Δ − 1), cross-multiplied; Δ ≤ 1 always qualifies.
        let pick = (0..m)
            .filter(|&e| alive[e])
            .filter(|&e| h.rank(e) * delta.saturating_sub(1) < n)
            .min_by_key(|&e| (h.rank(e), e));
        let Some(e) = pick else { break };
        alive[e] = false;
        for &x in h.edge(e) {
            degree[x] -= 1;
        }
        peeled.push(e);
    }

    let mut colors = vec![usize::MAX; m];
    let path = if peeled.len() == m {
        InductionPath::PureInduction
    } else {
        let (base, index) = h.filter_edges(|e, _| alive[e]);
        let solved = exact_chromatic_index(&base, budget)?;
        let path = InductionPath::ExactBase {
            base_edges: base.m(),
            base_q: solved.q,
        };
        if solved.q > n {
            return Ok(InductionOutcome {
                coloring: None,
                peeled,
                path,
                hypothesis_holds: induction_hypothesis(h),
            });
        }
        for (i, &orig) in index.iter().enumerate() {
            colors[orig] = solved.coloring.colors[i];
        }
        path
    };

    let mut taken = vec![false; n.max(1)];
    for &e in peeled.iter().rev() {
        taken.iter_mut().for_each(|t| *t = false);
        for f in 0..m {
            if colors[f] != usize::MAX && h.meets(e, f) {
                taken[colors[f]] = true;
            }
        }
        let c = taken
            .iter()
            .position(|&t| !t)
            .expect("a peeled edge meets fewer than n colored edges");
        colors[e] = c;
    }

    Ok(InductionOutcome {
        coloring: Some(Coloring {
            colors,
            palette_size: n,
        }),
        peeled,
        path,
        hypothesis_holds: induction_hypothesis(h),
    })
}
