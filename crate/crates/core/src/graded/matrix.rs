use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::linalg::{subspace_sum_dim, DenseMatrix, Field};
use crate::poly::{Monomial, Polynomial, RingSpec, VarNaming};

use super::phi::PhiMap;
use super::GradedError;

/// Largest minor expanded symbolically.
pub const MAX_MINOR_SIZE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    Row,
    Column,
}

/// An `m × n` matrix of linear forms, homogeneous along rows or columns.
///
/// For `Row` grading the ring has `m` blocks of `n` variables and entry
/// `(i, j)` is `Σ_k λ[i][j][k] x[i,k]`. For `Column` grading the ring has `n`
/// blocks of `m` variables and entry `(i, j)` is `Σ_k λ[i][j][k] x[k,j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedLinearMatrix<F: Field> {
    field: F,
    grading: Grading,
    m: usize,
    n: usize,
    coeffs: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> GradedLinearMatrix<F> {
    pub fn new(
        field: F,
        grading: Grading,
        m: usize,
        n: usize,
        coeffs: Vec<Vec<Vec<F::Elem>>>,
    ) -> Result<Self, GradedError> {
        if m == 0 || n == 0 {
            return Err(GradedError::Shape(format!("matrix must be nonempty, got {m}x{n}")));
        }
        let u = match grading {
            Grading::Row => n,
            Grading::Column => m,
        };
        if coeffs.len() != m {
            return Err(GradedError::Shape(format!("expected {m} rows, got {}", coeffs.len())));
        }
        for (i, row) in coeffs.iter().enumerate() {
            if row.len() != n {
                return Err(GradedError::Shape(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != u {
                    return Err(GradedError::Shape(format!(
                        "entry ({},{}) has {} coefficients, expected {u}",
                        i + 1,
                        j + 1,
                        v.len()
                    )));
                }
            }
        }
        Ok(GradedLinearMatrix { field, grading, m, n, coeffs })
    }

    /// The matrix of distinct variables: `(i,j) ↦ x[i,j]` in matrix-position
    /// naming, for either grading.
    pub fn generic_variables(field: F, grading: Grading, m: usize, n: usize) -> Result<Self, GradedError> {
        let coeffs = (0..m)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let (len, hot) = match grading {
                            Grading::Row => (n, j),
                            Grading::Column => (m, i),
                        };
                        (0..len).map(|k| if k == hot { field.one() } else { field.zero() }).collect()
                    })
                    .collect()
            })
            .collect();
        Self::new(field, grading, m, n, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Vec<Vec<F::Elem>>] {
        &self.coeffs
    }

    /// Number of variables per block.
    pub fn block_size(&self) -> usize {
        match self.grading {
            Grading::Row => self.n,
            Grading::Column => self.m,
        }
    }

    pub fn ring(&self) -> RingSpec {
        match self.grading {
            Grading::Row => RingSpec::new(vec![self.n; self.m]).expect("n > 0"),
            Grading::Column => RingSpec::new(vec![self.m; self.n]).expect("m > 0").with_naming(VarNaming::IndexBlock),
        }
    }

    fn require(&self, grading: Grading) -> Result<(), GradedError> {
        if self.grading != grading {
            return Err(GradedError::WrongGrading { expected: grading, found: self.grading });
        }
        Ok(())
    }

    fn check_entry(&self, i: usize, j: usize) -> Result<(), GradedError> {
        if i >= self.m || j >= self.n {
            return Err(GradedError::IndexOutOfRange { i, j, m: self.m, n: self.n });
        }
        Ok(())
    }

    /// The linear form `ℓ_ij` (zero-based indices).
    pub fn entry_poly(&self, i: usize, j: usize) -> Result<Polynomial<F>, GradedError> {
        self.check_entry(i, j)?;
        let ring = self.ring();
        let nv = ring.nvars();
        let block = match self.grading {
            Grading::Row => i,
            Grading::Column => j,
        };
        Ok(Polynomial::from_terms(
            &self.field,
            self.coeffs[i][j].iter().enumerate().map(|(k, c)| (Monomial::var(nv, ring.var(block, k)), c.clone())),
        ))
    }

    /// `b_L(A)`: dimension of the span of the columns of `L_A`, the rows of `L`
    /// indexed by the bitmask `rows`.
    pub fn column_span_dim(&self, rows: usize) -> Result<usize, GradedError> {
        self.require(Grading::Row)?;
        let chosen: Vec<usize> = (0..self.m).filter(|i| rows >> i & 1 == 1).collect();
        if chosen.is_empty() {
            return Ok(0);
        }
        let vectors: Vec<Vec<F::Elem>> =
            (0..self.n).map(|j| chosen.iter().flat_map(|&i| self.coeffs[i][j].iter().cloned()).collect()).collect();
        Ok(DenseMatrix::from_rows(self.field.clone(), chosen.len() * self.n, vectors)?.rank())
    }

    /// Coefficient matrix of the graded line `k` (row `k` for row grading,
    /// column `k` for column grading): its columns are the entries' vectors.
    fn line_matrix(&self, k: usize) -> DenseMatrix<F> {
        let u = self.block_size();
        let entries: Vec<&Vec<F::Elem>> = match self.grading {
            Grading::Row => self.coeffs[k].iter().collect(),
            Grading::Column => (0..self.m).map(|i| &self.coeffs[i][k]).collect(),
        };
        let mut mat = DenseMatrix::zeros(self.field.clone(), u, entries.len());
        for (c, v) in entries.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                mat.set(r, c, x.clone());
            }
        }
        mat
    }

    /// Linear relations among the entries of graded line `k`.
    pub fn line_kernel(&self, k: usize) -> Result<Vec<Vec<F::Elem>>, GradedError> {
        let lines = match self.grading {
            Grading::Row => self.m,
            Grading::Column => self.n,
        };
        if k >= lines {
            return Err(GradedError::Shape(format!("line {} out of range", k + 1)));
        }
        Ok(self.line_matrix(k).kernel_basis())
    }

    /// Basis of `V_i = { λ ∈ K^n : Σ_j λ_j ℓ_ij = 0 }`.
    pub fn row_kernel(&self, i: usize) -> Result<Vec<Vec<F::Elem>>, GradedError> {
        self.require(Grading::Row)?;
        self.line_kernel(i)
    }

    /// `dim V_A` for every subset mask `A` of the rows.
    pub fn kernel_sum_dims(&self) -> Result<Vec<usize>, GradedError> {
        self.require(Grading::Row)?;
        if self.m > 16 {
            return Err(GradedError::Shape(format!("{} rows is too many for subset enumeration", self.m)));
        }
        let kernels: Vec<_> = (0..self.m).map(|i| self.row_kernel(i)).collect::<Result<_, _>>()?;
        (0..1usize << self.m)
            .map(|mask| {
                let chosen: Vec<Vec<Vec<F::Elem>>> =
                    (0..self.m).filter(|i| mask >> i & 1 == 1).map(|i| kernels[i].clone()).collect();
                subspace_sum_dim(&self.field, &chosen).map_err(GradedError::from)
            })
            .collect()
    }

    /// `Φ(A) = n - dim V_A`.
    pub fn phi_from_kernels(&self) -> Result<PhiMap, GradedError> {
        let dims = self.kernel_sum_dims()?;
        PhiMap::new(self.m, self.n, dims.into_iter().map(|d| self.n - d).collect())
    }

    /// Determinant of the submatrix on `rows × cols` (zero-based, any order).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial<F>, GradedError> {
        if rows.len() != cols.len() {
            return Err(GradedError::BadColumns("row and column lists differ in length".into()));
        }
        let k = rows.len();
        if k > MAX_MINOR_SIZE {
            return Err(GradedError::MinorTooLarge(k));
        }
        for &i in rows {
            self.check_entry(i, 0)?;
        }
        for &j in cols {
            self.check_entry(0, j)?;
        }
        let entries: Vec<Vec<Polynomial<F>>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.entry_poly(i, j)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        let nv = self.ring().nvars();
        let mut memo = HashMap::new();
        Ok(cofactor(&entries, 0, (1u32 << k) - 1, &self.field, nv, &mut memo))
    }

    /// The maximal minor `[a_1, ..., a_m]` on strictly increasing columns.
    pub fn maximal_minor(&self, cols: &[usize]) -> Result<Polynomial<F>, GradedError> {
        if self.m > self.n {
            return Err(GradedError::TooManyRows { m: self.m, n: self.n });
        }
        if cols.len() != self.m || cols.windows(2).any(|w| w[0] >= w[1]) || cols.iter().any(|&c| c >= self.n) {
            return Err(GradedError::BadColumns(format!("{cols:?} is not an increasing list of {} columns", self.m)));
        }
        let rows: Vec<usize> = (0..self.m).collect();
        self.minor(&rows, cols)
    }

    /// All nonzero maximal minors, in lexicographic column order.
    pub fn maximal_minors(&self) -> Result<Vec<Polynomial<F>>, GradedError> {
        if self.m > self.n {
            return Err(GradedError::TooManyRows { m: self.m, n: self.n });
        }
        let mut out = Vec::new();
        for cols in k_subsets(self.n, self.m) {
            let p = self.maximal_minor(&cols)?;
            if !p.is_zero() {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Column sets (zero-based) of the nonzero maximal minors.
    pub fn nonzero_minor_supports(&self) -> Result<Vec<Vec<usize>>, GradedError> {
        self.require(Grading::Column)?;
        if self.m > self.n {
            return Err(GradedError::TooManyRows { m: self.m, n: self.n });
        }
        let mut out = Vec::new();
        for cols in k_subsets(self.n, self.m) {
            if !self.maximal_minor(&cols)?.is_zero() {
                out.push(cols);
            }
        }
        Ok(out)
    }

    /// All nonzero 2-minors.
    pub fn all_two_minors(&self) -> Result<Vec<Polynomial<F>>, GradedError> {
        if self.m < 2 || self.n < 2 {
            return Err(GradedError::Shape(format!("2-minors need at least 2x2, got {}x{}", self.m, self.n)));
        }
        let mut out = Vec::new();
        for rows in k_subsets(self.m, 2) {
            for cols in k_subsets(self.n, 2) {
                let p = self.minor(&rows, &cols)?;
                if !p.is_zero() {
                    out.push(p);
                }
            }
        }
        Ok(out)
    }
}

/// Laplace expansion along row `r` over the remaining column set `cols`.
fn cofactor<F: Field>(
    entries: &[Vec<Polynomial<F>>],
    r: usize,
    cols: u32,
    field: &F,
    nvars: usize,
    memo: &mut HashMap<u32, Polynomial<F>>,
) -> Polynomial<F> {
    if cols == 0 {
        return Polynomial::constant(field, nvars, field.one());
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Polynomial::zero();
    let mut position = 0;
    for j in 0..entries.len() {
        if cols >> j & 1 == 0 {
            continue;
        }
        let e = &entries[r][j];
        if !e.is_zero() {
            let sub = cofactor(entries, r + 1, cols & !(1 << j), field, nvars, memo);
            let term = e.mul(&sub, field);
            acc = if position % 2 == 0 { acc.add(&term, field) } else { acc.sub(&term, field) };
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// All increasing `k`-subsets of `0..n`, lexicographically.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}
