//! Recognition of balanced incomplete block designs and projective designs.

use serde::Serialize;

use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DesignKind {
    Bibd,
    ProjectiveDesign,
    /// A `(o² + o + 1, o + 1, 1)` BIBD with `o ≥ 2`.
    ProjectivePlane {
        order: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DesignParams {
    /// Number of points.
    pub v: usize,
    /// Block rank.
    pub r: usize,
    /// Replication degree.
    pub degree: usize,
    #[serde(flatten)]
    pub kind: DesignKind,
}

/// Uniform rank `r ≥ 2` with every vertex pair in exactly one edge.
///
/// Returns `(v, r, (v − 1)/(r − 1))`, tagged as a projective plane when the
/// parameters are those of one.
pub fn is_bibd(h: &Hypergraph) -> Option<DesignParams> {
    if h.m() == 0 || !h.is_uniform() {
        return None;
    }
    let r = h.rank(0);
    let v = h.n();
    if r < 2 || v < r {
        return None;
    }
    let mut covered = vec![false; v * v];
    for e in h.edges() {
        for (i, &x) in e.iter().enumerate() {
            for &y in &e[i + 1..] {
                let slot = &mut covered[x * v + y];
                if *slot {
                    return None;
                }
                *slot = true;
            }
        }
    }
    let all_covered = (0..v).all(|x| (x + 1..v).all(|y| covered[x * v + y]));
    if !all_covered {
        return None;
    }
    let degree = (v - 1) / (r - 1);
    debug_assert!(h.degrees().iter().all(|&d| d == degree));
    let order = r - 1;
    let kind = if order >= 2 && v == order * order + order + 1 {
        DesignKind::ProjectivePlane { order }
    } else {
        DesignKind::Bibd
    };
    Some(DesignParams { v, r, degree, kind })
}

/// Uniform, regular, and every two edges meet. Need not be linear.
///
/// Any recognized design satisfies `n ≤ r² − r + 1`; this is checked on
/// every recognition.
pub fn is_projective_design(h: &Hypergraph) -> Option<DesignParams> {
    if h.m() == 0 || !h.is_uniform() || !h.is_regular() {
        return None;
    }
    let pairwise = (0..h.m()).all(|e| (e + 1..h.m()).all(|f| h.meets(e, f)));
    if !pairwise {
        return None;
    }
    let r = h.rank(0);
    let v = h.n();
    assert!(
        v <= r * r - r + 1,
        "projective ({v}, {r}, _, 1) design exceeds n ≤ r² − r + 1"
    );
    Some(DesignParams {
        v,
        r,
        degree: h.degree(0),
        kind: DesignKind::ProjectiveDesign,
    })
}
