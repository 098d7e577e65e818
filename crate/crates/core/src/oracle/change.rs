use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{DenseMatrix, Field};
use crate::poly::{Monomial, Polynomial, RingSpec};

use super::OracleError;

/// An element of the product of `GL` groups acting blockwise: variable `j` of
/// block `b` maps to `sum_k g_b[k][j] x_{b,k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateChange<F: Field> {
    ring: RingSpec,
    blocks: Vec<DenseMatrix<F>>,
}

impl<F: Field> CoordinateChange<F> {
    pub fn from_blocks(ring: &RingSpec, blocks: Vec<DenseMatrix<F>>) -> Result<Self, OracleError> {
        if blocks.len() != ring.blocks() {
            return Err(OracleError::Shape(format!("{} blocks for a ring with {}", blocks.len(), ring.blocks())));
        }
        for (b, g) in blocks.iter().enumerate() {
            let s = ring.block_size(b);
            if g.rows() != s || g.cols() != s {
                return Err(OracleError::Shape(format!("block {} needs a {s}x{s} matrix", b + 1)));
            }
            if !g.is_invertible() {
                return Err(OracleError::NotInvertible(b + 1));
            }
        }
        Ok(CoordinateChange { ring: ring.clone(), blocks })
    }

    pub fn identity(field: &F, ring: &RingSpec) -> Self {
        let blocks = ring.block_sizes().iter().map(|&s| DenseMatrix::identity(field.clone(), s)).collect();
        CoordinateChange { ring: ring.clone(), blocks }
    }

    /// Uniformly random blocks, redrawn until invertible.
    pub fn random(field: &F, ring: &RingSpec, seed: u64) -> Self {
        Self::sample(field, ring, seed, |_, _| true)
    }

    /// Random upper-triangular blocks: each variable maps into the span of
    /// itself and the larger variables of its block. Borel-fixed ideals are
    /// stable under these.
    pub fn random_borel(field: &F, ring: &RingSpec, seed: u64) -> Self {
        Self::sample(field, ring, seed, |k, j| k <= j)
    }

    fn sample(field: &F, ring: &RingSpec, seed: u64, allowed: impl Fn(usize, usize) -> bool) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let blocks = ring
            .block_sizes()
            .iter()
            .map(|&s| loop {
                let mut g = DenseMatrix::zeros(field.clone(), s, s);
                for k in 0..s {
                    for j in 0..s {
                        if allowed(k, j) {
                            g.set(k, j, field.random(&mut rng));
                        }
                    }
                }
                if g.is_invertible() {
                    break g;
                }
            })
            .collect();
        CoordinateChange { ring: ring.clone(), blocks }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn blocks(&self) -> &[DenseMatrix<F>] {
        &self.blocks
    }

    /// The image of every variable.
    pub fn images(&self) -> Vec<Polynomial<F>> {
        let nv = self.ring.nvars();
        let mut out = Vec::with_capacity(nv);
        for (b, g) in self.blocks.iter().enumerate() {
            let field = g.field();
            for j in 0..g.cols() {
                let terms = (0..g.rows()).map(|k| (Monomial::var(nv, self.ring.var(b, k)), g.get(k, j).clone()));
                out.push(Polynomial::from_terms(field, terms));
            }
        }
        out
    }

    pub fn apply(&self, polys: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
        let images = self.images();
        let Some(field) = self.blocks.first().map(|g| g.field().clone()) else {
            return polys.to_vec();
        };
        polys.iter().map(|p| p.substitute(&images, &field, self.ring.nvars())).collect()
    }
}
