//! Seeded random hypergraphs for property tests and sampled corpora.

use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Draws per edge before giving up.
pub const MAX_DRAWS_PER_EDGE: usize = 1000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RandomError {
    #[error("rank range {lo}..={hi} is not within 1..={n}")]
    BadRanks { lo: usize, hi: usize, n: usize },
    #[error("gave up on edge {edge} after {draws} rejected draws")]
    Exhausted { edge: usize, draws: usize },
}

/// `m` edges on `n` vertices with ranks drawn uniformly from `ranks`. With
/// `linear`, edges sharing two or more vertices with an earlier edge are
/// rejected and redrawn. Deterministic for a fixed seed.
pub fn random_hypergraph(
    seed: u64,
    n: usize,
    m: usize,
    ranks: RangeInclusive<usize>,
    linear: bool,
) -> Result<Hypergraph, RandomError> {
    let (lo, hi) = (*ranks.start(), *ranks.end());
    if lo == 0 || lo > hi || hi > n {
        return Err(RandomError::BadRanks { lo, hi, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    for edge in 0..m {
        let mut accepted = None;
        for _ in 0..MAX_DRAWS_PER_EDGE {
            let k = rng.gen_range(lo..=hi);
            let mut e = sample(&mut rng, n, k).into_vec();
            e.sort_unstable();
            let clash = linear
                && edges
                    .iter()
                    .any(|f| f.iter().filter(|v| e.binary_search(v).is_ok()).count() >= 2);
            if !clash {
                accepted = Some(e);
                break;
            }
        }
        match accepted {
            Some(e) => edges.push(e),
            None => {
                return Err(RandomError::Exhausted {
                    edge,
                    draws: MAX_DRAWS_PER_EDGE,
                })
            }
        }
    }
    Ok(Hypergraph::new(n, edges).expect("sampled indices are in range"))
}
