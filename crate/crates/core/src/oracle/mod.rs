//! Gröbner bases over exact fields and generic initial ideals computed from
//! the definition: apply random coordinate changes, take initial ideals, and
//! require independent draws to agree.

mod buchberger;
mod change;
mod regression;

pub use buchberger::{buchberger, GroebnerBasis, Limits};
pub use change::CoordinateChange;
pub use regression::{three_minor_regression, ThreeMinorReport};

use crate::ideal::MonomialIdeal;
use crate::linalg::Field;
use crate::poly::{Polynomial, RingSpec, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("S-pair limit of {0} reached")]
    PairLimit(usize),
    #[error("term limit of {0} reached")]
    TermLimit(usize),
    #[error("block {0} of the coordinate change is singular")]
    NotInvertible(usize),
    #[error("shape: {0}")]
    Shape(String),
    #[error("the term order breaks the within-block variable order")]
    OrderBreaksBlocks,
    #[error("at least two seeds are needed, got {0}")]
    TooFewSeeds(usize),
    #[error("genericity not certified: seeds disagreed in {attempts} attempts")]
    Unstable { attempts: usize },
    #[error("internal: {0}")]
    Internal(String),
}

/// Seeds, retry budget and resource caps for [`gin`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinOptions {
    pub seeds: Vec<u64>,
    /// Extra rounds with fresh seeds after a disagreement.
    pub retries: usize,
    pub limits: Limits,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions { seeds: vec![1, 2], retries: 3, limits: Limits::default() }
    }
}

impl GinOptions {
    pub fn with_seeds(seeds: Vec<u64>) -> Self {
        GinOptions { seeds, ..Self::default() }
    }
}

/// A gin together with the seeds that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct GinComputation {
    pub gin: MonomialIdeal,
    pub seeds: Vec<u64>,
    pub attempts: usize,
}

/// `in(g . I)` for one coordinate change.
pub fn initial_ideal_after<F: Field>(
    gens: &[Polynomial<F>],
    ring: &RingSpec,
    order: &TermOrder,
    change: &CoordinateChange<F>,
    field: &F,
    limits: Limits,
) -> Result<MonomialIdeal, OracleError> {
    let moved = change.apply(gens);
    Ok(buchberger(&moved, order, field, limits)?.initial_ideal(ring))
}

/// The initial ideal with no coordinate change.
pub fn initial_ideal<F: Field>(
    gens: &[Polynomial<F>],
    ring: &RingSpec,
    order: &TermOrder,
    field: &F,
    limits: Limits,
) -> Result<MonomialIdeal, OracleError> {
    Ok(buchberger(gens, order, field, limits)?.initial_ideal(ring))
}

fn round_seeds(seeds: &[u64], round: usize) -> Vec<u64> {
    let shift = (round as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    seeds.iter().map(|s| s.wrapping_add(shift)).collect()
}

/// The multigraded gin of the ideal generated by `gens`.
///
/// Each round draws one random coordinate change per seed. A round succeeds
/// when all initial ideals agree and are Borel-fixed in the field's
/// characteristic; otherwise fresh seeds are tried, up to `retries` times.
pub fn gin<F: Field>(
    gens: &[Polynomial<F>],
    ring: &RingSpec,
    order: &TermOrder,
    field: &F,
    opts: &GinOptions,
) -> Result<GinComputation, OracleError> {
    if opts.seeds.len() < 2 {
        return Err(OracleError::TooFewSeeds(opts.seeds.len()));
    }
    if !order.respects_block_convention(ring) {
        return Err(OracleError::OrderBreaksBlocks);
    }
    for round in 0..=opts.retries {
        let seeds = round_seeds(&opts.seeds, round);
        let mut first: Option<MonomialIdeal> = None;
        let mut agreed = true;
        for &s in &seeds {
            let g = CoordinateChange::random(field, ring, s);
            let ini = initial_ideal_after(gens, ring, order, &g, field, opts.limits)?;
            if !ini.is_borel_fixed(field.characteristic()) || first.as_ref().is_some_and(|f| *f != ini) {
                agreed = false;
                break;
            }
            first.get_or_insert(ini);
        }
        if agreed {
            return Ok(GinComputation { gin: first.expect("at least two seeds"), seeds, attempts: round + 1 });
        }
    }
    Err(OracleError::Unstable { attempts: opts.retries + 1 })
}

#[cfg(test)]
mod tests;
