//! Fixed inputs shared by the benchmarks.

use ginminors_core::generate::random_instance;
use ginminors_core::{GradedLinearMatrix, Grading, PrimeField};

/// A generic matrix over `F_32003`, the same for every run.
pub fn generic(grading: Grading, m: usize, n: usize) -> GradedLinearMatrix<PrimeField> {
    random_instance(&PrimeField::default(), grading, m, n, 42, &[]).expect("benchmark shapes are in range")
}

/// Row-graded shapes used across the benchmarks.
pub const SHAPES: [(usize, usize); 3] = [(2, 3), (3, 4), (4, 4)];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(generic(Grading::Row, 3, 4), generic(Grading::Row, 3, 4));
    }
}
