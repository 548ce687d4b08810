//! Executable chromatic-index bounds for linear hypergraphs and the tools
//! built around them: the clique-rank (Brooks-type) bound, criticality
//! conditions for minimal counterexamples, the low-rank peeling colorer, and
//! extension of a coloring from the rank ≥ 3 layer to the rank-2 layer.
//!
//! Bounds are identified `C1`..`C5`:
//!
//! | id | bound on `q(H)` | exception |
//! |----|-----------------|-----------|
//! | C1 | `n` | |
//! | C2 | `k + 1`, `k = max_x D(x)` | |
//! | C3 | `ΔP − max(Δ, P) + 1` | |
//! | C4 | `ΔP − max(Δ, P)` (needs `P ≥ 3`) | `Δ ≤ P` and projective design: `ΔP − P + 1` |
//! | C5 | `k` (needs `P ≥ 3`) | `(T² − T + 1, T, 1)` BIBD with `Δ = P = T`, `k = T² − T`: `k + 1` |
//!
//! All of them assume a linear hypergraph without rank-1 edges. Design
//! exceptions are recognized after dropping isolated vertices.

mod critical;
mod extension;
mod induction;

pub use critical::{
    critical_check, is_excluded_bibd, CriticalityReport, EdgeCriticality, ExclusionVariant,
};
pub use extension::{
    deficit_excess, extend_coloring, h2_degree_fits_palette, h3_clique_degree_dominates,
    h3_is_regular, split_h3_h2, DeficitExcess, ExtensionReport, LayerSplit,
};
pub use induction::{
    color_by_rank_induction, induction_hypothesis, InductionOutcome, InductionPath,
};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{exact_chromatic_index, ColoringError};
use crate::design::{is_bibd, is_projective_design, DesignParams};
use crate::hypergraph::Hypergraph;
use crate::stats::{max_clique_degree, max_clique_rank};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConjectureError {
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("inconclusive: {0}")]
    Inconclusive(#[from] ColoringError),
    #[error("base coloring is not a valid coloring of the rank ≥ 3 layer with {palette} colors")]
    InvalidBaseColoring { palette: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ConjectureId {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 5] = [Self::C1, Self::C2, Self::C3, Self::C4, Self::C5];
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ConjectureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C1" => Ok(Self::C1),
            "C2" => Ok(Self::C2),
            "C3" => Ok(Self::C3),
            "C4" => Ok(Self::C4),
            "C5" => Ok(Self::C5),
            other => Err(format!("unknown conjecture id {other:?} (expected C1..C5)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "exception-case-pass")]
    ExceptionCasePass,
    #[serde(rename = "VIOLATION")]
    Violation,
    #[serde(rename = "not-applicable")]
    NotApplicable,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

/// An exception clause that applies to the instance, with the weaker bound it
/// grants and the design that triggered it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionClause {
    pub bound: usize,
    pub design: DesignParams,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundInfo {
    pub id: ConjectureId,
    /// `None` when the hypotheses do not hold.
    pub bound: Option<usize>,
    #[serde(skip)]
    pub not_applicable: Option<&'static str>,
    pub exception: Option<ExceptionClause>,
}

/// Why `h` falls outside the common hypotheses, if it does.
fn common_hypotheses(h: &Hypergraph) -> Option<&'static str> {
    if h.has_rank_below(2) {
        Some("edges of rank below 2")
    } else if !h.is_linear() {
        Some("not linear")
    } else {
        None
    }
}

/// Claimed upper bound for `id` with any applicable exception clause.
pub fn conjecture_bound(h: &Hypergraph, id: ConjectureId) -> BoundInfo {
    let na = |reason| BoundInfo {
        id,
        bound: None,
        not_applicable: Some(reason),
        exception: None,
    };
    if let Some(reason) = common_hypotheses(h) {
        return na(reason);
    }
    let delta = h.max_degree();
    let p = h.max_rank();
    let k = max_clique_degree(h);
    let bound = |b: usize, exception| BoundInfo {
        id,
        bound: Some(b),
        not_applicable: None,
        exception,
    };
    match id {
        ConjectureId::C1 => bound(h.n(), None),
        ConjectureId::C2 => bound(k + 1, None),
        ConjectureId::C3 => bound((delta * p + 1).saturating_sub(delta.max(p)), None),
        ConjectureId::C4 => {
            if p < 3 {
                return na("maximum rank below 3");
            }
            let exception = (delta <= p)
                .then(|| is_projective_design(&h.without_isolated()))
                .flatten()
                .map(|design| ExceptionClause {
                    bound: delta * p - p + 1,
                    design,
                });
            bound(delta * p - delta.max(p), exception)
        }
        ConjectureId::C5 => {
            if p < 3 {
                return na("maximum rank below 3");
            }
            let t = p;
            let exception = (delta == t && k == t * t - t)
                .then(|| is_bibd(&h.without_isolated()))
                .flatten()
                .filter(|d| d.v == t * t - t + 1 && d.r == t)
                .map(|design| ExceptionClause {
                    bound: k + 1,
                    design,
                });
            bound(k, exception)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub id: ConjectureId,
    pub bound: Option<usize>,
    pub q: Option<usize>,
    pub status: Status,
    pub exception: Option<ExceptionClause>,
}

/// Classifies a computed chromatic index (`None`: search abandoned).
pub fn classify(info: &BoundInfo, q: Option<usize>) -> ConjectureReport {
    let status = match (info.bound, q) {
        (None, _) => Status::NotApplicable,
        (Some(_), None) => Status::Inconclusive,
        (Some(b), Some(q)) if q <= b => Status::Pass,
        (Some(_), Some(q)) => match info.exception {
            Some(ex) if q <= ex.bound => Status::ExceptionCasePass,
            _ => Status::Violation,
        },
    };
    ConjectureReport {
        id: info.id,
        bound: info.bound,
        q: if info.bound.is_some() { q } else { None },
        status,
        exception: info.exception,
    }
}

/// Computes `q(H)` exactly (once) and classifies it against each bound.
/// A budget overrun is reported as inconclusive, never as a pass.
pub fn verify_conjectures(
    h: &Hypergraph,
    ids: &[ConjectureId],
    budget: u64,
) -> Vec<ConjectureReport> {
    let infos: Vec<BoundInfo> = ids.iter().map(|&id| conjecture_bound(h, id)).collect();
    let q = if infos.iter().any(|i| i.bound.is_some()) {
        exact_chromatic_index(h, budget).ok().map(|r| r.q)
    } else {
        None
    };
    infos.iter().map(|info| classify(info, q)).collect()
}

pub fn verify_conjecture(h: &Hypergraph, id: ConjectureId, budget: u64) -> ConjectureReport {
    verify_conjectures(h, &[id], budget)[0]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BrooksException {
    None,
    OddCycle,
    Complete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BrooksReport {
    /// `max_e R(e)`.
    pub r_max: usize,
    /// `R`, or `R + 1` when an exception is present.
    pub bound: usize,
    pub exception: BrooksException,
    pub q: Option<usize>,
    /// `q <= bound`; `None` when the search was abandoned.
    pub holds: Option<bool>,
}

/// Exception kind for the bound `q ≤ R`. The simple line graph (pairs
/// counted once) is inspected component by component: an odd cycle when
/// `R = 2`, or a complete component on `R + 1` vertices.
pub fn brooks_exception(h: &Hypergraph) -> BrooksException {
    let r = max_clique_rank(h);
    let line = h.line_graph().simple_projection();
    let mut found = BrooksException::None;
    for comp in line.components() {
        let g = line.induced(&comp);
        if r == 2 && g.is_odd_cycle() {
            return BrooksException::OddCycle;
        }
        if comp.len() == r + 1 && g.is_complete() {
            found = BrooksException::Complete;
        }
    }
    found
}

pub fn brooks_check(h: &Hypergraph, budget: u64) -> BrooksReport {
    let r_max = max_clique_rank(h);
    let exception = brooks_exception(h);
    let bound = if exception == BrooksException::None {
        r_max
    } else {
        r_max + 1
    };
    let q = exact_chromatic_index(h, budget).ok().map(|r| r.q);
    BrooksReport {
        r_max,
        bound,
        exception,
        q,
        holds: q.map(|q| q <= bound),
    }
}
