//! Generators for projective and affine planes over prime fields, BIBD
//! duals, and the plane-with-copies extremal family.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::design::{is_bibd, is_projective_design, DesignParams};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("plane order {0} is not a prime (only prime orders are supported)")]
    NotPrime(usize),
    #[error("rank must be at least 3, got {0}")]
    RankTooSmall(usize),
    #[error("degree {degree} is not a positive multiple of rank − 1 = {step}")]
    NotDivisible { degree: usize, step: usize },
    #[error("no plane of order {0} can be built (prime orders only)")]
    NoPlane(usize),
    #[error("input is not a (v, k, 1) BIBD")]
    NotBibd,
    #[error("edge index {0} out of range")]
    NoSuchEdge(usize),
    #[error("cannot parse construction {0:?}")]
    BadSpec(String),
}

pub fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Normalised homogeneous coordinates of PG(2, p): the first non-zero
/// coordinate is 1.
fn projective_points(p: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::with_capacity(p * p + p + 1);
    for a in 0..p {
        for b in 0..p {
            pts.push([1, a, b]);
        }
    }
    for b in 0..p {
        pts.push([0, 1, b]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// The point/line incidence structure of PG(2, p) for prime `p`.
///
/// Points and lines are both indexed by normalised coordinate vectors in
/// the same order; point `i` lies on line `j` iff their dot product is 0
/// mod `p`.
pub fn projective_plane(order: usize) -> Result<Hypergraph, ConstructionError> {
    if !is_prime(order) {
        return Err(ConstructionError::NotPrime(order));
    }
    let pts = projective_points(order);
    let edges = pts
        .iter()
        .map(|line| {
            pts.iter()
                .enumerate()
                .filter(|(_, pt)| {
                    pt.iter().zip(line).map(|(a, b)| a * b).sum::<usize>() % order == 0
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Ok(Hypergraph::new(pts.len(), edges).expect("plane incidence is well formed"))
}

/// Removes edge `line` and every vertex on it; surviving vertices are
/// renumbered in order and the other edges lose the deleted vertices.
pub fn delete_line(h: &Hypergraph, line: usize) -> Result<Hypergraph, ConstructionError> {
    if line >= h.m() {
        return Err(ConstructionError::NoSuchEdge(line));
    }
    let gone = h.edge(line);
    let mut relabel = vec![None; h.n()];
    let mut next = 0;
    for (x, slot) in relabel.iter_mut().enumerate() {
        if gone.binary_search(&x).is_err() {
            *slot = Some(next);
            next += 1;
        }
    }
    let edges = h
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != line)
        .map(|(_, e)| e.iter().filter_map(|&x| relabel[x]).collect())
        .collect();
    Ok(Hypergraph::new(next, edges).expect("relabelled edges stay in range"))
}

/// AG(2, p): the projective plane of prime order `p` minus one line, a
/// `(p², p, 1)` BIBD.
pub fn affine_plane(order: usize) -> Result<Hypergraph, ConstructionError> {
    let plane = projective_plane(order)?;
    delete_line(&plane, plane.m() - 1)
}

/// Each edge repeated `t` times in place.
pub fn duplicate_edges(h: &Hypergraph, t: usize) -> Hypergraph {
    let edges = h
        .edges()
        .iter()
        .flat_map(|e| std::iter::repeat_n(e.clone(), t))
        .collect();
    Hypergraph::new(h.n(), edges).expect("copies of valid edges")
}

/// Uniform rank-`rank` hypergraph of maximum degree `degree` whose edges
/// pairwise intersect: take the plane of order `rank − 2`, copy every line
/// `t = degree / (rank − 1)` times, and give each copy its own new vertex.
///
/// Vertices `0..v` are the plane's points; the new vertex of copy `c` of line
/// `j` is `v + j·t + c`. The chromatic index is `t·(rank² − 3·rank + 3)`.
pub fn plane_with_copies(rank: usize, degree: usize) -> Result<Hypergraph, ConstructionError> {
    if rank < 3 {
        return Err(ConstructionError::RankTooSmall(rank));
    }
    let step = rank - 1;
    if degree == 0 || !degree.is_multiple_of(step) {
        return Err(ConstructionError::NotDivisible { degree, step });
    }
    let order = rank - 2;
    if !is_prime(order) {
        return Err(ConstructionError::NoPlane(order));
    }
    let t = degree / step;
    let plane = projective_plane(order)?;
    let v = plane.n();
    let mut edges = Vec::with_capacity(plane.m() * t);
    for (j, line) in plane.edges().iter().enumerate() {
        for c in 0..t {
            let mut e = line.clone();
            e.push(v + j * t + c);
            edges.push(e);
        }
    }
    Ok(Hypergraph::new(v + plane.m() * t, edges).expect("fresh vertices are in range"))
}

/// Dual of a `(v, k, 1)` BIBD, checked to be a projective design with
/// degree `k`, rank `(v − 1)/(k − 1)` and `v(v − 1)/(k(k − 1))` vertices.
pub fn bibd_dual(h: &Hypergraph) -> Result<(Hypergraph, DesignParams), ConstructionError> {
    let src = is_bibd(h).ok_or(ConstructionError::NotBibd)?;
    let dual = h.dual();
    let params = is_projective_design(&dual).expect("dual of a BIBD is a projective design");
    let (v, k) = (src.v, src.r);
    assert_eq!(params.degree, k);
    assert_eq!(params.r, (v - 1) / (k - 1));
    assert_eq!(params.v, v * (v - 1) / (k * (k - 1)));
    Ok((dual, params))
}

/// A named construction, as written on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    /// `plane:p`
    ProjectivePlane { order: usize },
    /// `affine:p`
    AffinePlane { order: usize },
    /// `thm13ii:r,delta`
    PlaneWithCopies { rank: usize, degree: usize },
    /// `dual:<file>`
    Dual { path: String },
    /// `random:n,m,min_rank,max_rank` (linear), seeded separately.
    Random {
        n: usize,
        m: usize,
        min_rank: usize,
        max_rank: usize,
    },
}

impl FromStr for ConstructionSpec {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConstructionError::BadSpec(s.to_owned());
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums = || -> Result<Vec<usize>, ConstructionError> {
            args.split(',')
                .map(|a| a.trim().parse().map_err(|_| bad()))
                .collect()
        };
        match kind {
            "plane" => match nums()?[..] {
                [order] => Ok(Self::ProjectivePlane { order }),
                _ => Err(bad()),
            },
            "affine" => match nums()?[..] {
                [order] => Ok(Self::AffinePlane { order }),
                _ => Err(bad()),
            },
            "thm13ii" => match nums()?[..] {
                [rank, degree] => Ok(Self::PlaneWithCopies { rank, degree }),
                _ => Err(bad()),
            },
            "random" => match nums()?[..] {
                [n, m, min_rank, max_rank] => Ok(Self::Random {
                    n,
                    m,
                    min_rank,
                    max_rank,
                }),
                _ => Err(bad()),
            },
            "dual" if !args.is_empty() => Ok(Self::Dual {
                path: args.to_owned(),
            }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ProjectivePlane { order } => write!(f, "plane:{order}"),
            Self::AffinePlane { order } => write!(f, "affine:{order}"),
            Self::PlaneWithCopies { rank, degree } => write!(f, "thm13ii:{rank},{degree}"),
            Self::Dual { path } => write!(f, "dual:{path}"),
            Self::Random {
                n,
                m,
                min_rank,
                max_rank,
            } => write!(f, "random:{n},{m},{min_rank},{max_rank}"),
        }
    }
}
