//! Truncated multigraded Hilbert series: the closed form `H_Φ`, brute-force
//! counts of standard monomials, and the binomial identity behind them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graded::PhiMap;
use crate::ideal::MonomialIdeal;
use crate::poly::{Monomial, Multidegree};

/// Default total-degree truncation.
pub const DEFAULT_CAP: usize = 8;

/// Default bound on candidate monomials enumerated per multidegree.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HilbertError {
    #[error("{candidates} candidate monomials in degree {deg:?} exceed the limit {limit}")]
    TooManyMonomials { deg: Vec<usize>, candidates: u64, limit: u64 },
    #[error("coefficient overflow")]
    Overflow,
    #[error("multidegree {0:?} does not match the ring's {1} blocks")]
    BlockMismatch(Vec<usize>, usize),
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// `binom(n, k)`, zero when `k < 0` or `k > n` (including all negative `n`).
pub fn binom(n: i64, k: i64) -> Result<u64, HilbertError> {
    if k < 0 || n < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.checked_mul((n - i) as u128).ok_or(HilbertError::Overflow)? / (i as u128 + 1);
    }
    u64::try_from(c).map_err(|_| HilbertError::Overflow)
}

/// Power series in `y_1..y_m` truncated at total degree `cap`; only nonzero
/// coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedMultiSeries {
    m: usize,
    cap: usize,
    coeffs: BTreeMap<Vec<usize>, u64>,
}

impl TruncatedMultiSeries {
    pub fn zero(m: usize, cap: usize) -> Self {
        TruncatedMultiSeries { m, cap, coeffs: BTreeMap::new() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn get(&self, a: &[usize]) -> u64 {
        self.coeffs.get(a).copied().unwrap_or(0)
    }

    /// Set a coefficient; degrees beyond the cap are ignored.
    pub fn set(&mut self, a: Vec<usize>, c: u64) {
        assert_eq!(a.len(), self.m, "multidegree length");
        if a.iter().sum::<usize>() > self.cap {
            return;
        }
        if c == 0 {
            self.coeffs.remove(&a);
        } else {
            self.coeffs.insert(a, c);
        }
    }

    /// Nonzero terms sorted by total degree, then lexicographically.
    pub fn terms(&self) -> Vec<(&[usize], u64)> {
        let mut t: Vec<(&[usize], u64)> = self.coeffs.iter().map(|(k, &v)| (k.as_slice(), v)).collect();
        t.sort_by(|a, b| (a.0.iter().sum::<usize>(), a.0).cmp(&(b.0.iter().sum::<usize>(), b.0)));
        t
    }

    /// Multiply by `Π_i (1 - y_i)^{-extra[i]}`, the series of `extra[i]` free
    /// variables of degree `e_i`.
    pub fn with_free_variables(&self, extra: &[usize]) -> Result<Self, HilbertError> {
        if extra.len() != self.m {
            return Err(HilbertError::Invalid(format!("{} free-variable counts for {} blocks", extra.len(), self.m)));
        }
        let mut acc: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        let mut err = None;
        for (a, &c) in &self.coeffs {
            let room = self.cap - a.iter().sum::<usize>();
            for_each_bounded(self.m, room, |k| {
                // Free variables of degree e_i contribute binom(extra_i + k_i - 1, k_i).
                let w = (0..self.m).try_fold(c, |w, i| {
                    let f = if extra[i] == 0 {
                        u64::from(k[i] == 0)
                    } else {
                        binom((extra[i] + k[i]) as i64 - 1, k[i] as i64)?
                    };
                    w.checked_mul(f).ok_or(HilbertError::Overflow)
                });
                match w {
                    Ok(0) => {}
                    Ok(w) => {
                        let key: Vec<usize> = a.iter().zip(k).map(|(x, y)| x + y).collect();
                        let slot = acc.entry(key).or_insert(0);
                        match slot.checked_add(w) {
                            Some(v) => *slot = v,
                            None => err = Some(HilbertError::Overflow),
                        }
                    }
                    Err(e) => err = Some(e),
                }
            });
        }
        if let Some(e) = err {
            return Err(e);
        }
        let mut out = Self::zero(self.m, self.cap);
        for (k, v) in acc {
            out.set(k, v);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            cap: self.cap,
            coeffs: self.terms().into_iter().map(|(d, c)| SeriesTerm { deg: d.to_vec(), c }).collect(),
        }
    }
}

/// `{ "cap": D, "coeffs": [ {"deg": [..], "c": n}, ... ] }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub cap: usize,
    pub coeffs: Vec<SeriesTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub deg: Vec<usize>,
    pub c: u64,
}

/// Every `a ∈ N^m` with `|a| <= cap`.
fn for_each_bounded(m: usize, cap: usize, mut f: impl FnMut(&[usize])) {
    fn rec(a: &mut Vec<usize>, i: usize, left: usize, f: &mut dyn FnMut(&[usize])) {
        if i == a.len() {
            f(a);
            return;
        }
        for v in 0..=left {
            a[i] = v;
            rec(a, i + 1, left - v, f);
        }
        a[i] = 0;
    }
    let mut a = vec![0; m];
    rec(&mut a, 0, cap, &mut f);
}

/// The closed-form series `H_Φ` truncated at total degree `cap`.
pub fn h_phi_series(phi: &PhiMap, cap: usize) -> Result<TruncatedMultiSeries, HilbertError> {
    let m = phi.m();
    let mut s = TruncatedMultiSeries::zero(m, cap);
    let mut err = None;
    for_each_bounded(m, cap, |a| {
        let support = a.iter().enumerate().filter(|(_, &x)| x > 0).fold(0usize, |acc, (i, _)| acc | 1 << i);
        let u = phi.get(support) as i64;
        let total = a.iter().sum::<usize>() as i64;
        let c = if total == 0 { Ok(1) } else { binom(u - 1 + total, u - 1) };
        match c {
            Ok(c) => s.set(a.to_vec(), c),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(s),
    }
}

/// Number of monomials of multidegree `a` outside `I`, by enumeration.
pub fn standard_monomial_count(ideal: &MonomialIdeal, a: &Multidegree, limit: u64) -> Result<u64, HilbertError> {
    let ring = ideal.ring();
    if a.0.len() != ring.blocks() {
        return Err(HilbertError::BlockMismatch(a.0.clone(), ring.blocks()));
    }
    let mut candidates: u64 = 1;
    for (b, &ai) in a.0.iter().enumerate() {
        let u = ring.block_size(b) as i64;
        let count = binom(u - 1 + ai as i64, ai as i64)?;
        let count = if u == 0 { u64::from(ai == 0) } else { count };
        candidates = candidates.checked_mul(count).ok_or(HilbertError::Overflow)?;
    }
    if candidates > limit {
        return Err(HilbertError::TooManyMonomials { deg: a.0.clone(), candidates, limit });
    }
    if candidates == 0 {
        return Ok(0);
    }
    let mut exps = vec![0u16; ring.nvars()];
    let mut count = 0;
    enumerate_blocks(ideal, &a.0, 0, &mut exps, &mut count);
    Ok(count)
}

fn enumerate_blocks(ideal: &MonomialIdeal, a: &[usize], block: usize, exps: &mut Vec<u16>, count: &mut u64) {
    let ring = ideal.ring();
    if block == a.len() {
        if !ideal.contains(&Monomial::from_exps(exps)) {
            *count += 1;
        }
        return;
    }
    let first = if ring.block_size(block) == 0 { 0 } else { ring.var(block, 0) };
    fill_block(ideal, a, block, first, ring.block_size(block), a[block], exps, count);
}

#[allow(clippy::too_many_arguments)]
fn fill_block(
    ideal: &MonomialIdeal,
    a: &[usize],
    block: usize,
    var: usize,
    left_vars: usize,
    left_deg: usize,
    exps: &mut Vec<u16>,
    count: &mut u64,
) {
    if left_vars <= 1 {
        if left_vars == 1 {
            exps[var] = left_deg as u16;
            enumerate_blocks(ideal, a, block + 1, exps, count);
            exps[var] = 0;
        } else if left_deg == 0 {
            enumerate_blocks(ideal, a, block + 1, exps, count);
        }
        return;
    }
    for e in 0..=left_deg {
        exps[var] = e as u16;
        fill_block(ideal, a, block, var + 1, left_vars - 1, left_deg - e, exps, count);
    }
    exps[var] = 0;
}

/// Series of `S/I` truncated at `cap`, coefficient by coefficient.
pub fn series_of_quotient(ideal: &MonomialIdeal, cap: usize, limit: u64) -> Result<TruncatedMultiSeries, HilbertError> {
    let m = ideal.ring().blocks();
    let mut degrees = Vec::new();
    for_each_bounded(m, cap, |a| degrees.push(a.to_vec()));
    let mut s = TruncatedMultiSeries::zero(m, cap);
    for a in degrees {
        let c = standard_monomial_count(ideal, &Multidegree(a.clone()), limit)?;
        s.set(a, c);
    }
    Ok(s)
}

/// Both sides of `Σ_{|w| <= u-1} Π binom(w_i + a_i - 1, a_i - 1) = binom(u - 1 + |a|, u - 1)`.
pub fn binomial_identity_sides(a: &[usize], u: usize) -> Result<(u64, u64), HilbertError> {
    if a.is_empty() || a.contains(&0) || u == 0 {
        return Err(HilbertError::Invalid(format!("need a_i >= 1 and u >= 1, got a = {a:?}, u = {u}")));
    }
    let mut lhs: u64 = 0;
    let mut err = None;
    for_each_bounded(a.len(), u - 1, |w| {
        let term = w.iter().zip(a).try_fold(1u64, |acc, (&wi, &ai)| {
            let b = binom((wi + ai) as i64 - 1, ai as i64 - 1)?;
            acc.checked_mul(b).ok_or(HilbertError::Overflow)
        });
        match term.and_then(|t| lhs.checked_add(t).ok_or(HilbertError::Overflow)) {
            Ok(v) => lhs = v,
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let total: usize = a.iter().sum();
    let rhs = binom((u - 1 + total) as i64, u as i64 - 1)?;
    Ok((lhs, rhs))
}

pub fn binomial_identity_check(a: &[usize], u: usize) -> Result<bool, HilbertError> {
    let (l, r) = binomial_identity_sides(a, u)?;
    Ok(l == r)
}
