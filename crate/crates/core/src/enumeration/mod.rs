//! Isomorph-free exhaustive generation of small hypergraphs.
//!
//! Candidate edges are all vertex subsets with rank in the allowed range,
//! ordered by rank then lexicographically. A hypergraph is a strictly
//! increasing list of candidate indices, and it is canonical when no vertex
//! relabeling produces a lexicographically smaller sorted list. Removing the
//! largest edge of a canonical list leaves a canonical list, so depth-first
//! extension by larger candidates, keeping only canonical children, visits
//! every isomorphism class exactly once.

mod canon;

pub use canon::{are_isomorphic, canonical_form, CanonError, CanonicalForm, MAX_CANON_VERTICES};

use std::sync::Arc;

use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Largest `n` the generator accepts.
pub const MAX_ENUM_VERTICES: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("need 2 <= min_rank ({min}) <= max_rank ({max}) <= n ({n})")]
    BadRanks { min: usize, max: usize, n: usize },
    #[error("n = {0} is above the enumeration limit of {MAX_ENUM_VERTICES}")]
    TooLarge(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    /// Exact vertex count.
    pub n: usize,
    pub min_rank: usize,
    pub max_rank: usize,
    pub max_degree: usize,
    pub require_linear: bool,
    pub allow_isolated: bool,
    pub include_empty: bool,
}

impl EnumSpec {
    /// Linear, ranks `2..=n`, no degree cap, isolated vertices allowed, empty
    /// hypergraph excluded.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            min_rank: 2,
            max_rank: n.max(2),
            max_degree: usize::MAX,
            require_linear: true,
            allow_isolated: true,
            include_empty: false,
        }
    }

    pub fn max_rank(mut self, p: usize) -> Self {
        self.max_rank = p;
        self
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = d;
        self
    }

    pub fn linear(mut self, yes: bool) -> Self {
        self.require_linear = yes;
        self
    }

    pub fn isolated(mut self, yes: bool) -> Self {
        self.allow_isolated = yes;
        self
    }

    fn check(&self) -> Result<(), EnumError> {
        if self.n > MAX_ENUM_VERTICES {
            return Err(EnumError::TooLarge(self.n));
        }
        if self.min_rank < 2 || self.min_rank > self.max_rank || self.max_rank > self.n {
            return Err(EnumError::BadRanks {
                min: self.min_rank,
                max: self.max_rank,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Re-checks every predicate on a finished hypergraph.
    pub fn admits(&self, h: &Hypergraph) -> bool {
        h.n() == self.n
            && h.edges()
                .iter()
                .all(|e| (self.min_rank..=self.max_rank).contains(&e.len()))
            && h.max_degree() <= self.max_degree
            && (!self.require_linear || h.is_linear())
            && (self.allow_isolated || h.degrees().iter().all(|&d| d > 0))
            && (self.include_empty || h.m() > 0)
            && h.validate().duplicate_edges.is_empty()
    }
}

/// Precomputed candidate edges and relabelings for one spec.
struct Universe {
    n: usize,
    masks: Vec<u16>,
    /// Candidate index of each mask, or `u32::MAX`.
    index_of: Vec<u32>,
    /// Vertex-pair bitmask of each candidate.
    pairs: Vec<u64>,
    perms: Vec<Vec<u8>>,
}

fn pair_bit(n: usize, a: usize, b: usize) -> u64 {
    1 << (a * n + b - (a + 1) * (a + 2) / 2)
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn heap(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            cur.swap(j, k - 1);
        }
    }
    heap(n, &mut cur, &mut out);
    // The identity cannot produce a smaller image.
    out.retain(|p| p.iter().enumerate().any(|(i, &v)| i != v as usize));
    out
}

impl Universe {
    fn new(spec: &EnumSpec) -> Self {
        let n = spec.n;
        let mut masks: Vec<u16> = (0u32..1 << n)
            .map(|m| m as u16)
            .filter(|m| (spec.min_rank..=spec.max_rank).contains(&(m.count_ones() as usize)))
            .collect();
        let key = |m: &u16| {
            let verts: Vec<usize> = (0..n).filter(|&v| m & (1 << v) != 0).collect();
            (verts.len(), verts)
        };
        masks.sort_by_key(key);
        let mut index_of = vec![u32::MAX; 1 << n];
        for (i, &m) in masks.iter().enumerate() {
            index_of[m as usize] = i as u32;
        }
        let pairs = masks
            .iter()
            .map(|&m| {
                let mut bits = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if m & (1 << a) != 0 && m & (1 << b) != 0 {
                            bits |= pair_bit(n, a, b);
                        }
                    }
                }
                bits
            })
            .collect();
        Self {
            n,
            masks,
            index_of,
            pairs,
            perms: permutations(n),
        }
    }

    fn image(&self, mask: u16, perm: &[u8]) -> u16 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= 1 << perm[v];
        }
        out
    }

    /// True iff no relabeling maps `set` to a lexicographically smaller
    /// sorted candidate list.
    fn is_canonical(&self, set: &[u32], buf: &mut Vec<u32>) -> bool {
        for perm in &self.perms {
            buf.clear();
            buf.extend(
                set.iter()
                    .map(|&c| self.index_of[self.image(self.masks[c as usize], perm) as usize]),
            );
            buf.sort_unstable();
            if buf.as_slice() < set {
                return false;
            }
        }
        true
    }

    fn hypergraph(&self, set: &[u32]) -> Hypergraph {
        let edges = set
            .iter()
            .map(|&c| {
                let m = self.masks[c as usize];
                (0..self.n).filter(|&v| m & (1 << v) != 0).collect()
            })
            .collect();
        Hypergraph::new(self.n, edges).expect("candidate masks are in range")
    }
}

/// Depth-first orderly generator; yields one representative per class in a
/// fixed order.
pub struct Enumerator {
    spec: EnumSpec,
    universe: Arc<Universe>,
    set: Vec<u32>,
    /// Next candidate to try at each depth; `next.len() == set.len() + 1`.
    next: Vec<u32>,
    degrees: Vec<usize>,
    covered: u64,
    buf: Vec<u32>,
    started: bool,
    /// Stop once the depth drops below this (used for sharding).
    floor: usize,
}

impl Enumerator {
    fn feasible(&self, c: u32) -> bool {
        let mask = self.universe.masks[c as usize];
        if self.spec.require_linear && self.covered & self.universe.pairs[c as usize] != 0 {
            return false;
        }
        (0..self.spec.n).all(|v| mask & (1 << v) == 0 || self.degrees[v] < self.spec.max_degree)
    }

    fn push(&mut self, c: u32) {
        let mask = self.universe.masks[c as usize];
        for v in 0..self.spec.n {
            if mask & (1 << v) != 0 {
                self.degrees[v] += 1;
            }
        }
        self.covered |= self.universe.pairs[c as usize];
        self.set.push(c);
    }

    fn pop(&mut self) {
        let c = self.set.pop().expect("non-empty");
        let mask = self.universe.masks[c as usize];
        for v in 0..self.spec.n {
            if mask & (1 << v) != 0 {
                self.degrees[v] -= 1;
            }
        }
        // Candidates in a linear set cover disjoint pairs.
        if self.spec.require_linear {
            self.covered &= !self.universe.pairs[c as usize];
        }
    }

    fn output_ok(&self) -> bool {
        self.spec.allow_isolated || self.degrees.iter().all(|&d| d > 0)
    }
}

impl Iterator for Enumerator {
    type Item = Hypergraph;

    fn next(&mut self) -> Option<Hypergraph> {
        if !self.started {
            self.started = true;
            if self.floor == 0 && self.spec.include_empty && self.output_ok() {
                return Some(self.universe.hypergraph(&[]));
            }
        }
        let total = self.universe.masks.len() as u32;
        loop {
            let depth = self.next.len().checked_sub(1)?;
            let c = self.next[depth];
            if c >= total || depth < self.floor {
                self.next.pop();
                if depth <= self.floor {
                    self.next.clear();
                    return None;
                }
                self.pop();
                continue;
            }
            self.next[depth] = c + 1;
            if !self.feasible(c) {
                continue;
            }
            self.push(c);
            let mut buf = std::mem::take(&mut self.buf);
            let canonical = self.universe.is_canonical(&self.set, &mut buf);
            self.buf = buf;
            if !canonical {
                self.pop();
                continue;
            }
            self.next.push(c + 1);
            if self.output_ok() {
                return Some(self.universe.hypergraph(&self.set));
            }
        }
    }
}

/// Streams one hypergraph per isomorphism class admitted by `spec`.
pub fn enumerate(spec: &EnumSpec) -> Result<Enumerator, EnumError> {
    spec.check()?;
    Ok(Enumerator {
        universe: Arc::new(Universe::new(spec)),
        set: Vec::new(),
        next: vec![0],
        degrees: vec![0; spec.n],
        covered: 0,
        buf: Vec::new(),
        started: false,
        floor: 0,
        spec: spec.clone(),
    })
}

/// Same sequence as [`enumerate`], computed with one task per first edge.
#[cfg(feature = "parallel")]
pub fn enumerate_parallel(spec: &EnumSpec) -> Result<Vec<Hypergraph>, EnumError> {
    use rayon::prelude::*;

    spec.check()?;
    let universe = Arc::new(Universe::new(spec));
    let roots: Vec<u32> = {
        let mut buf = Vec::new();
        (0..universe.masks.len() as u32)
            .filter(|&c| universe.is_canonical(&[c], &mut buf))
            .collect()
    };
    let mut head = Vec::new();
    if spec.include_empty && (spec.allow_isolated || spec.n == 0) {
        head.push(universe.hypergraph(&[]));
    }
    let shards: Vec<Vec<Hypergraph>> = roots
        .par_iter()
        .map(|&c| {
            let mut shard = Enumerator {
                universe: Arc::clone(&universe),
                set: Vec::new(),
                next: vec![u32::MAX, c + 1],
                degrees: vec![0; spec.n],
                covered: 0,
                buf: Vec::new(),
                started: true,
                floor: 1,
                spec: spec.clone(),
            };
            let mut out = Vec::new();
            if !shard.feasible(c) {
                return out;
            }
            shard.push(c);
            if shard.output_ok() {
                out.push(shard.universe.hypergraph(&shard.set));
            }
            out.extend(shard.by_ref());
            out
        })
        .collect();
    head.extend(shards.into_iter().flatten());
    Ok(head)
}
