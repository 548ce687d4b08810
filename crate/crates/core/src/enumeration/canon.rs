//! Canonical forms by exhaustive vertex relabeling.
//!
//! Vertices are first split into cells by an isomorphism invariant (degree,
//! then the sorted ranks of the incident edges). Only relabelings that send
//! each cell onto its own block of positions are tried, and the
//! lexicographically smallest sorted edge list wins.

use std::fmt;

use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("{n} vertices exceeds the exhaustive-relabeling limit of {MAX_CANON_VERTICES}")]
    TooLarge { n: usize },
}

/// Encoded canonical form: `n` and `m` as little-endian `u32`, then each
/// edge as its rank followed by its vertices, one byte each.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The representative hypergraph the form encodes.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let (n, m, edges) = self.decode();
        debug_assert_eq!(m, edges.len());
        Hypergraph::new(n, edges).expect("canonical form encodes a valid hypergraph")
    }

    fn decode(&self) -> (usize, usize, Vec<Vec<usize>>) {
        let b = &self.0;
        let n = u32::from_le_bytes(b[0..4].try_into().unwrap()) as usize;
        let m = u32::from_le_bytes(b[4..8].try_into().unwrap()) as usize;
        let mut edges = Vec::with_capacity(m);
        let mut i = 8;
        while i < b.len() {
            let k = b[i] as usize;
            edges.push(b[i + 1..i + 1 + k].iter().map(|&v| v as usize).collect());
            i += 1 + k;
        }
        (n, m, edges)
    }
}

/// `n:e;e;...` with each edge's vertices comma-separated, e.g. `3:0,1;1,2`.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, _, edges) = self.decode();
        write!(f, "{n}:")?;
        for (i, e) in edges.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, v) in e.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

fn edge_key(e: &[usize]) -> (usize, &[usize]) {
    (e.len(), e)
}

fn sorted_image(edges: &[Vec<usize>], pos: &[usize], buf: &mut Vec<Vec<usize>>) {
    buf.clear();
    for e in edges {
        let mut img: Vec<usize> = e.iter().map(|&v| pos[v]).collect();
        img.sort_unstable();
        buf.push(img);
    }
    buf.sort_by(|a, b| edge_key(a).cmp(&edge_key(b)));
}

fn less(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    a.iter()
        .map(|e| edge_key(e))
        .lt(b.iter().map(|e| edge_key(e)))
}

struct CellSearch<'a> {
    edges: &'a [Vec<usize>],
    /// Vertices of each cell, cells in invariant order.
    cells: Vec<Vec<usize>>,
    cell_at: Vec<usize>,
    placed: Vec<bool>,
    pos: Vec<usize>,
    best: Option<Vec<Vec<usize>>>,
    buf: Vec<Vec<usize>>,
}

impl CellSearch<'_> {
    /// Chooses the vertex for position `p` among the unplaced members of the
    /// cell owning that position.
    fn run(&mut self, p: usize) {
        if p == self.pos.len() {
            sorted_image(self.edges, &self.pos, &mut self.buf);
            if self.best.as_ref().is_none_or(|b| less(&self.buf, b)) {
                self.best = Some(self.buf.clone());
            }
            return;
        }
        let cell = self.cell_at[p];
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.placed[v] {
                continue;
            }
            self.placed[v] = true;
            self.pos[v] = p;
            self.run(p + 1);
            self.placed[v] = false;
        }
    }
}

/// Canonical form under vertex relabeling and edge reordering.
pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm, CanonError> {
    let n = h.n();
    if n > MAX_CANON_VERTICES {
        return Err(CanonError::TooLarge { n });
    }
    let invariant = |x: usize| {
        let mut ranks: Vec<usize> = h.incident_edges(x).iter().map(|&e| h.rank(e)).collect();
        ranks.sort_unstable();
        (std::cmp::Reverse(h.degree(x)), ranks)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| invariant(x));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &x in &order {
        match cells.last_mut() {
            Some(cell) if invariant(cell[0]) == invariant(x) => cell.push(x),
            _ => cells.push(vec![x]),
        }
    }
    let cell_at = cells
        .iter()
        .enumerate()
        .flat_map(|(i, c)| std::iter::repeat_n(i, c.len()))
        .collect();

    let mut search = CellSearch {
        edges: h.edges(),
        cells,
        cell_at,
        placed: vec![false; n],
        pos: vec![0; n],
        best: None,
        buf: Vec::new(),
    };
    search.run(0);
    let best = search.best.expect("at least one relabeling");

    let mut bytes = Vec::new();
    bytes.extend_from_slice(&(n as u32).to_le_bytes());
    bytes.extend_from_slice(&(h.m() as u32).to_le_bytes());
    for e in best {
        bytes.push(e.len() as u8);
        bytes.extend(e.into_iter().map(|v| v as u8));
    }
    Ok(CanonicalForm(bytes))
}

pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool, CanonError> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    let (mut ra, mut rb) = (a.ranks(), b.ranks());
    ra.sort_unstable();
    rb.sort_unstable();
    if da != db || ra != rb {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
