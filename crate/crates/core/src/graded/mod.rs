//! Row- and column-graded matrices of linear forms and their linear-algebra
//! invariants: column spans `b_L(A)`, row kernels `V_i`, the map Φ, minors.

pub mod matrix;
pub mod phi;

pub use matrix::{k_subsets, GradedLinearMatrix, Grading, MAX_MINOR_SIZE};
pub use phi::PhiMap;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradedError {
    #[error("expected a {expected:?}-graded matrix, got {found:?}")]
    WrongGrading { expected: Grading, found: Grading },
    #[error("entry ({i},{j}) out of range for a {m}x{n} matrix")]
    IndexOutOfRange { i: usize, j: usize, m: usize, n: usize },
    #[error("maximal minors need m <= n, got {m}x{n}")]
    TooManyRows { m: usize, n: usize },
    #[error("bad column selection: {0}")]
    BadColumns(String),
    #[error("{0}x{0} minors exceed the symbolic expansion limit")]
    MinorTooLarge(usize),
    #[error("invalid Φ map: {0}")]
    InvalidPhi(String),
    #[error("malformed matrix: {0}")]
    Shape(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[cfg(test)]
mod tests;
