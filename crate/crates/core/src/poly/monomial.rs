use std::cmp::Ordering;

use smallvec::SmallVec;

use super::ring::{Multidegree, RingSpec};

pub type Exponents = SmallVec<[u16; 16]>;

/// A monomial as a dense exponent vector over the global variable ranking.
///
/// `Ord` is lexicographic in the global ranking (index 0 largest); it is the
/// canonical order used for storage and listings, not a working term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), deg: 0 }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[v] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), deg }
    }

    /// Product of the listed variables (repetitions raise exponents).
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut m = Self::one(nvars);
        for &v in vars {
            m.exps[v] += 1;
            m.deg += 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, v: usize) -> u16 {
        self.exps[v]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn multidegree(&self, ring: &RingSpec) -> Multidegree {
        let mut d = vec![0usize; ring.blocks()];
        for (v, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                d[ring.block_of(v)] += e as usize;
            }
        }
        Multidegree(d)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, deg: self.deg - other.deg })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variables with positive exponent, in global order.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v).collect()
    }

    /// Support as a bitmask; requires at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.exps.len() <= 64);
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (v, _)| m | (1u64 << v))
    }

    pub fn with_exp(&self, v: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.deg = m.deg - m.exps[v] as u32 + e as u32;
        m.exps[v] = e;
        m
    }

    /// `x[1,1]^2*x[2,3]`, or `1` for the unit monomial.
    pub fn render(&self, ring: &RingSpec) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (v, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.var_name(v)),
                _ => parts.push(format!("{}^{}", ring.var_name(v), e)),
            }
        }
        parts.join("*")
    }

    /// Parse the output of [`Monomial::render`].
    pub fn parse(ring: &RingSpec, s: &str) -> Result<Monomial, super::PolyError> {
        let s = s.trim();
        let mut m = Monomial::one(ring.nvars());
        if s == "1" {
            return Ok(m);
        }
        for factor in s.split('*') {
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u16 = e.trim().parse().map_err(|_| super::PolyError::BadVariable(factor.to_string()))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            let v = ring.parse_var(name)?;
            m = m.with_exp(v, m.exp(v) + e);
        }
        Ok(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
