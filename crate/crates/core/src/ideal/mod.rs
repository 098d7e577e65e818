//! Monomial ideals: canonical minimal generators, membership, intersection,
//! radical and Borel-fixed tests, minimal primes of squarefree ideals and
//! Alexander duality.

mod borel;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::poly::{Monomial, PolyError, RingSpec};

pub use borel::binomial_nonzero_mod;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("ideal is not radical")]
    NotRadical,
    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("{0} variables exceed the 64-variable limit of squarefree routines")]
    TooManyVariables(usize),
    #[error("cannot embed: {0}")]
    Embed(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A monomial ideal with its canonical minimal generating set.
///
/// Generators are pairwise non-dividing and sorted in descending lex order of
/// the global variable ranking, so equality of ideals is equality of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingSpec,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(ring: RingSpec) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: RingSpec) -> Self {
        let one = Monomial::one(ring.nvars());
        MonomialIdeal { ring, gens: vec![one] }
    }

    /// Keep the divisibility-minimal generators, in canonical order.
    pub fn minimalize(ring: RingSpec, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        // Ascending degree first so a divisor is always seen before its multiples.
        all.sort_by_key(|m| m.degree());
        let mut kept: Vec<Monomial> = Vec::new();
        for m in all {
            if !kept.iter().any(|g| g.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { ring, gens: kept }
    }

    /// The ideal generated by the listed variables.
    pub fn from_vars(ring: RingSpec, vars: &[usize]) -> Self {
        let nv = ring.nvars();
        Self::minimalize(ring, vars.iter().map(|&v| Monomial::var(nv, v)))
    }

    /// Parse rendered generators.
    pub fn parse(ring: RingSpec, gens: &[impl AsRef<str>]) -> Result<Self, IdealError> {
        let monos = gens.iter().map(|g| Monomial::parse(&ring, g.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::minimalize(ring, monos))
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.same_ring(other)?;
        Ok(Self::minimalize(self.ring.clone(), self.gens.iter().chain(&other.gens).cloned()))
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<(), IdealError> {
        if self.ring.block_sizes() != other.ring.block_sizes() {
            return Err(IdealError::RingMismatch);
        }
        Ok(())
    }

    /// Intersection via pairwise lcms, folded left.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.same_ring(other)?;
        let lcms = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        Ok(Self::minimalize(self.ring.clone(), lcms))
    }

    pub fn is_radical(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Combinatorial Borel-fixedness for the block grading in characteristic
    /// `characteristic` (0 for characteristic zero).
    pub fn is_borel_fixed(&self, characteristic: u64) -> bool {
        borel::is_borel_fixed(self, characteristic)
    }

    fn check_squarefree_scope(&self) -> Result<(), IdealError> {
        if self.ring.nvars() > 64 {
            return Err(IdealError::TooManyVariables(self.ring.nvars()));
        }
        if self.is_unit() {
            return Err(IdealError::UnitIdeal);
        }
        if !self.is_radical() {
            return Err(IdealError::NotRadical);
        }
        Ok(())
    }

    /// Minimal primes of a squarefree ideal as sorted variable sets: the
    /// minimal vertex covers of the hypergraph of generator supports. The zero
    /// ideal has no primes.
    pub fn minimal_primes_squarefree(&self) -> Result<Vec<Vec<usize>>, IdealError> {
        self.check_squarefree_scope()?;
        if self.is_zero() {
            return Ok(Vec::new());
        }
        let edges: Vec<u64> = self.gens.iter().map(|g| g.support_mask()).collect();
        let covers = minimal_transversals(&edges);
        let mut out: Vec<Vec<usize>> = covers.into_iter().map(mask_to_vars).collect();
        out.sort();
        Ok(out)
    }

    /// Alexander dual of a squarefree ideal: one generator per minimal prime.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal, IdealError> {
        self.check_squarefree_scope()?;
        if self.is_zero() {
            // The dual would be the unit ideal.
            return Err(IdealError::ZeroIdeal);
        }
        let nv = self.ring.nvars();
        let primes = self.minimal_primes_squarefree()?;
        Ok(Self::minimalize(self.ring.clone(), primes.iter().map(|p| Monomial::from_vars(nv, p))))
    }

    /// Codimension of a radical ideal: the smallest minimal prime. Zero for
    /// the zero ideal.
    pub fn codim(&self) -> Result<usize, IdealError> {
        Ok(self.minimal_primes_squarefree()?.iter().map(|p| p.len()).min().unwrap_or(0))
    }

    /// Re-read the generators in another ring by matching `(block, index)`.
    pub fn embed(&self, target: &RingSpec) -> Result<MonomialIdeal, IdealError> {
        if target.blocks() != self.ring.blocks() {
            return Err(IdealError::Embed("block counts differ".into()));
        }
        let nv = target.nvars();
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut exps = vec![0u16; nv];
            for v in g.support() {
                let id = self.ring.var_id(v);
                let t = target
                    .checked_var(id)
                    .map_err(|_| IdealError::Embed(format!("{} has no counterpart", self.ring.var_name(v))))?;
                exps[t] = g.exp(v);
            }
            gens.push(Monomial::from_exps(&exps));
        }
        Ok(Self::minimalize(target.clone(), gens))
    }

    pub fn render_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.render(&self.ring)).collect()
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson { gens: self.render_gens() }
    }
}

/// `{ "gens": ["x[1,1]*x[2,1]", ...] }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub gens: Vec<String>,
}

/// Intersection of a list of ideals in one ring; the empty list gives the
/// unit ideal of `ring`.
pub fn intersect(ring: &RingSpec, ideals: &[MonomialIdeal]) -> Result<MonomialIdeal, IdealError> {
    let mut acc = MonomialIdeal::unit(ring.clone());
    for i in ideals {
        acc = acc.intersection(i)?;
    }
    Ok(acc)
}

fn mask_to_vars(mask: u64) -> Vec<usize> {
    (0..64).filter(|v| mask >> v & 1 == 1).collect()
}

/// Minimal transversals of a hypergraph given by edge bitmasks, computed
/// edge by edge (Berge's algorithm).
fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut edges = edges.to_vec();
    edges.sort_by_key(|e| e.count_ones());
    let mut family: Vec<u64> = vec![0];
    for &e in &edges {
        let mut next: Vec<u64> = Vec::new();
        let (hit, miss): (Vec<u64>, Vec<u64>) = family.iter().partition(|&&t| t & e != 0);
        next.extend(&hit);
        for t in miss {
            for v in 0..64 {
                if e >> v & 1 == 1 {
                    next.push(t | 1 << v);
                }
            }
        }
        next.sort_by_key(|t| t.count_ones());
        next.dedup();
        let mut minimal: Vec<u64> = Vec::new();
        for t in next {
            if !minimal.iter().any(|&s| (s & t) == s) {
                minimal.push(t);
            }
        }
        family = minimal;
    }
    family
}

/// The Borel prime `P_a = (x[i,j] : j <= a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BorelPrime {
    pub a: Vec<usize>,
}

impl BorelPrime {
    pub fn new(a: Vec<usize>) -> Self {
        BorelPrime { a }
    }

    /// The zero vector names the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// `P_self ⊇ P_other`.
    pub fn contains(&self, other: &BorelPrime) -> bool {
        self.a.len() == other.a.len() && self.a.iter().zip(&other.a).all(|(x, y)| x >= y)
    }

    pub fn vars(&self, ring: &RingSpec) -> Result<Vec<usize>, IdealError> {
        if self.a.len() != ring.blocks() {
            return Err(IdealError::RingMismatch);
        }
        let mut vars = Vec::new();
        for (b, &k) in self.a.iter().enumerate() {
            if k > ring.block_size(b) {
                return Err(IdealError::Embed(format!("P_{:?} needs {k} variables in block {}", self.a, b + 1)));
            }
            vars.extend((0..k).map(|j| ring.var(b, j)));
        }
        Ok(vars)
    }

    pub fn to_ideal(&self, ring: &RingSpec) -> Result<MonomialIdeal, IdealError> {
        Ok(MonomialIdeal::from_vars(ring.clone(), &self.vars(ring)?))
    }

    pub fn render(&self, ring: &RingSpec) -> Result<Vec<String>, IdealError> {
        Ok(self.vars(ring)?.into_iter().map(|v| ring.var_name(v)).collect())
    }
}

/// Drop duplicates and every prime containing another one.
pub fn prune_primes(mut primes: Vec<BorelPrime>) -> Vec<BorelPrime> {
    primes.sort();
    primes.dedup();
    let kept: Vec<BorelPrime> =
        primes.iter().filter(|p| !primes.iter().any(|q| q != *p && p.contains(q))).cloned().collect();
    kept
}
