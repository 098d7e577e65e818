use super::field::Field;
use super::LinalgError;

/// Row-major dense matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Output of [`DenseMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub reduced: DenseMatrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        DenseMatrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Build from row vectors; every row must have length `cols`.
    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(DenseMatrix { field, rows: nrows, cols, data })
    }

    pub fn from_i64_rows(field: F, rows: &[&[i64]]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let conv = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, cols, conv)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    let prod = f.mul(a, other.get(k, j));
                    out.data[idx] = f.add(&out.data[idx], &prod);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
            .collect())
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(r, prow);
            let inv = f.inv(m.get(prow, c)).expect("pivot is nonzero");
            for cc in c..m.cols {
                let v = f.mul(m.get(prow, cc), &inv);
                m.set(prow, cc, v);
            }
            for rr in 0..m.rows {
                if rr == prow {
                    continue;
                }
                let factor = m.get(rr, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for cc in c..m.cols {
                    let v = f.sub(m.get(rr, cc), &f.mul(&factor, m.get(prow, cc)));
                    m.set(rr, cc, v);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        Rref { reduced: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{ v : M v = 0 }`.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(reduced.get(r, free));
                }
                v
            })
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Dimension of the sum of the subspaces spanned by each list of vectors.
pub fn subspace_sum_dim<F: Field>(field: &F, bases: &[Vec<Vec<F::Elem>>]) -> Result<usize, LinalgError> {
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    let mut width: Option<usize> = None;
    for v in bases.iter().flatten() {
        match width {
            None => width = Some(v.len()),
            Some(w) if w != v.len() => return Err(LinalgError::DimensionMismatch { expected: w, found: v.len() }),
            _ => {}
        }
        rows.push(v.clone());
    }
    let Some(width) = width else {
        return Ok(0);
    };
    Ok(DenseMatrix::from_rows(field.clone(), width, rows)?.rank())
}

/// Basis of the intersection of the spans of `u` and `w` inside K^len.
pub fn subspace_intersection<F: Field>(
    field: &F,
    len: usize,
    u: &[Vec<F::Elem>],
    w: &[Vec<F::Elem>],
) -> Result<Vec<Vec<F::Elem>>, LinalgError> {
    // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
    for v in u.iter().chain(w) {
        if v.len() != len {
            return Err(LinalgError::DimensionMismatch { expected: len, found: v.len() });
        }
    }
    let cols = u.len() + w.len();
    if cols == 0 {
        return Ok(Vec::new());
    }
    let mut sys = DenseMatrix::zeros(field.clone(), len, cols);
    for (c, v) in u.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            sys.set(r, c, x.clone());
        }
    }
    for (c, v) in w.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            sys.set(r, u.len() + c, field.neg(x));
        }
    }
    let mut spanning = Vec::new();
    for sol in sys.kernel_basis() {
        let mut vec = vec![field.zero(); len];
        for (a, ui) in sol.iter().take(u.len()).zip(u) {
            for (acc, x) in vec.iter_mut().zip(ui) {
                *acc = field.add(acc, &field.mul(a, x));
            }
        }
        spanning.push(vec);
    }
    // Reduce to a basis.
    if spanning.is_empty() {
        return Ok(spanning);
    }
    let r = DenseMatrix::from_rows(field.clone(), len, spanning)?.rref();
    Ok((0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect())
}
