use serde::{Deserialize, Serialize};

use super::GradedError;

/// A monotone set function `Φ : 2^[m] -> {0..n}` with `Φ(∅) = n`.
///
/// Subsets are bitmasks over `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhiMap {
    m: usize,
    n: usize,
    values: Vec<usize>,
}

impl PhiMap {
    /// `values[mask]` for every subset mask of `0..m`.
    pub fn new(m: usize, n: usize, values: Vec<usize>) -> Result<Self, GradedError> {
        if m == 0 || n == 0 {
            return Err(GradedError::InvalidPhi("m and n must be positive".into()));
        }
        if m > 16 {
            return Err(GradedError::InvalidPhi(format!("m = {m} is too large")));
        }
        if values.len() != 1 << m {
            return Err(GradedError::InvalidPhi(format!("expected {} values, got {}", 1 << m, values.len())));
        }
        if values[0] != n {
            return Err(GradedError::InvalidPhi(format!("Φ(∅) = {} but n = {n}", values[0])));
        }
        if let Some(v) = values.iter().find(|&&v| v > n) {
            return Err(GradedError::InvalidPhi(format!("value {v} exceeds n = {n}")));
        }
        // Monotone iff Φ(A) >= Φ(A ∪ {i}) for every A and i.
        for a in 0..values.len() {
            for i in 0..m {
                let b = a | (1 << i);
                if values[a] < values[b] {
                    return Err(GradedError::InvalidPhi(format!(
                        "not monotone: Φ({a:#b}) = {} < Φ({b:#b}) = {}",
                        values[a], values[b]
                    )));
                }
            }
        }
        Ok(PhiMap { m, n, values })
    }

    /// The map that is `n` everywhere.
    pub fn constant(m: usize, n: usize) -> Result<Self, GradedError> {
        Self::new(m, n, vec![n; 1 << m])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, mask: usize) -> usize {
        self.values[mask]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `d_i = Φ({i})`.
    pub fn caps(&self) -> Vec<usize> {
        (0..self.m).map(|i| self.values[1 << i]).collect()
    }
}
