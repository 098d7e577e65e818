//! Closed-form gins and prime decompositions for maximal minors and 2-minors
//! of graded matrices of linear forms, and the Borel ideals attached to a
//! [`PhiMap`](crate::graded::PhiMap).

mod maxminors;
mod phi;

pub use maxminors::{gin_maxminors_col, gin_maxminors_row, gin_maxminors_row_maxcodim};
pub use phi::{borel_ideal_from_phi, borel_ideal_in, gin_2minors, prime_containment_predicate, primes_from_phi};

use serde::{Deserialize, Serialize};

use crate::graded::GradedError;
use crate::ideal::{intersect, BorelPrime, IdealError, MonomialIdeal};
use crate::poly::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("maximal minors need m <= n, got {m}x{n}")]
    TooManyRows { m: usize, n: usize },
    #[error("ideal of maximal minors has codimension {actual}, expected {expected}")]
    NotMaxCodim { expected: usize, actual: usize },
    #[error("vector out of range: {0}")]
    VectorOutOfRange(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// Which closed form produced a [`GinResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Formula {
    RowMaximalMinors,
    RowMaximalMinorsMaxCodim,
    ColumnMaximalMinors,
    TwoMinors,
}

/// A gin together with its prime decomposition.
///
/// Construction checks that the primes intersect to the gin, that no prime
/// contains another, and that the gin is radical and Borel fixed. The zero
/// ideal carries an empty prime list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinResult {
    gin: MonomialIdeal,
    primes: Vec<BorelPrime>,
    formula: Formula,
}

impl GinResult {
    pub fn new(gin: MonomialIdeal, mut primes: Vec<BorelPrime>, formula: Formula) -> Result<Self, FormulaError> {
        primes.sort();
        let ring = gin.ring().clone();
        if primes.is_empty() != gin.is_zero() {
            return Err(FormulaError::Inconsistent(format!(
                "{} primes for an ideal with {} generators",
                primes.len(),
                gin.gens().len()
            )));
        }
        for (i, p) in primes.iter().enumerate() {
            if primes.iter().enumerate().any(|(j, q)| i != j && p.contains(q)) {
                return Err(FormulaError::Inconsistent(format!("prime {:?} is redundant", p.a)));
            }
        }
        if !primes.is_empty() {
            let ideals = primes.iter().map(|p| p.to_ideal(&ring)).collect::<Result<Vec<_>, _>>()?;
            if intersect(&ring, &ideals)? != gin {
                return Err(FormulaError::Inconsistent("primes do not intersect to the gin".into()));
            }
        }
        if !gin.is_radical() || !gin.is_borel_fixed(0) {
            return Err(FormulaError::Inconsistent("gin is not radical Borel fixed".into()));
        }
        Ok(GinResult { gin, primes, formula })
    }

    pub fn gin(&self) -> &MonomialIdeal {
        &self.gin
    }

    pub fn primes(&self) -> &[BorelPrime] {
        &self.primes
    }

    pub fn formula(&self) -> Formula {
        self.formula
    }

    pub fn ring(&self) -> &RingSpec {
        self.gin.ring()
    }

    /// Codimension read off the decomposition (0 for the zero ideal).
    pub fn codim(&self) -> usize {
        self.primes.iter().map(|p| p.a.iter().sum::<usize>()).min().unwrap_or(0)
    }

    pub fn to_json(&self) -> GinJson {
        let ring = self.ring();
        GinJson {
            gens: self.gin.render_gens(),
            primes: self.primes.iter().map(|p| p.render(ring).expect("validated against ring")).collect(),
            theorem: self.formula,
        }
    }
}

/// `{ "gens": [...], "primes": [[...], ...], "theorem": "..." }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GinJson {
    pub gens: Vec<String>,
    pub primes: Vec<Vec<String>>,
    pub theorem: Formula,
}

/// Calls `f` on every vector `v` with `lo[i] <= v[i] <= hi[i]`, in lex order.
pub(crate) fn for_each_vector(lo: &[usize], hi: &[usize], mut f: impl FnMut(&[usize])) {
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    let mut v = lo.to_vec();
    loop {
        f(&v);
        let mut k = v.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if v[k] < hi[k] {
                v[k] += 1;
                break;
            }
            v[k] = lo[k];
        }
    }
}

/// Normalize a decomposition: deduplicate, prune containments, and map the
/// lone zero prime to the empty list.
pub(crate) fn normalize_primes(primes: Vec<BorelPrime>) -> Vec<BorelPrime> {
    let mut p = crate::ideal::prune_primes(primes);
    p.retain(|q| !q.is_zero());
    p
}
