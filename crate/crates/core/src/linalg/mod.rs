//! Exact dense linear algebra: row reduction, rank, kernels and subspace sums.

pub mod field;
pub mod matrix;

pub use field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use matrix::{subspace_intersection, subspace_sum_dim, DenseMatrix, Rref};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
