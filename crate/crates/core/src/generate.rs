//! Reproducible random graded matrices, optionally with planted degeneracies.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graded::{GradedError, GradedLinearMatrix, Grading};
use crate::linalg::{DenseMatrix, Field};

/// Largest `m` or `n` the generator accepts.
pub const MAX_SIDE: usize = 12;

/// Attempts at drawing a full-rank planted kernel before giving up.
const KERNEL_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("size {m}x{n} outside 1..={max}")]
    Size { m: usize, n: usize, max: usize },
    #[error("bad degeneracy spec {0:?}")]
    BadSpec(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("could not plant a kernel of dimension {dim} on line {line}")]
    KernelFailed { line: usize, dim: usize },
    #[error(transparent)]
    Graded(#[from] GradedError),
}

/// One planted degeneracy; indices are one-based as on the command line.
///
/// A "line" is a row for row-graded matrices and a column for column-graded
/// ones: the entries sharing a block of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    ZeroRow(usize),
    ZeroCol(usize),
    /// Row `target` becomes a copy of row `source` (same coefficients).
    DupRow {
        target: usize,
        source: usize,
    },
    DupCol {
        target: usize,
        source: usize,
    },
    /// The entries of line `line` satisfy exactly `dim` independent relations.
    Kernel {
        line: usize,
        dim: usize,
    },
}

impl FromStr for Degeneracy {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, GenerateError> {
        let bad = || GenerateError::BadSpec(s.to_string());
        let (kind, arg) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(bad);
        let pair = |t: &str| -> Result<(usize, usize), GenerateError> {
            let (a, b) = t.split_once('=').ok_or_else(bad)?;
            Ok((num(a)?, b.trim().parse::<usize>().map_err(|_| bad())?))
        };
        match kind.trim() {
            "zero-row" => Ok(Degeneracy::ZeroRow(num(arg)?)),
            "zero-col" => Ok(Degeneracy::ZeroCol(num(arg)?)),
            "dup-row" | "dup-col" => {
                let (target, source) = pair(arg)?;
                if source == 0 {
                    return Err(bad());
                }
                Ok(if kind.trim() == "dup-row" {
                    Degeneracy::DupRow { target, source }
                } else {
                    Degeneracy::DupCol { target, source }
                })
            }
            "kernel" => {
                let (line, dim) = pair(arg)?;
                Ok(Degeneracy::Kernel { line, dim })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::ZeroRow(i) => write!(f, "zero-row:{i}"),
            Degeneracy::ZeroCol(j) => write!(f, "zero-col:{j}"),
            Degeneracy::DupRow { target, source } => write!(f, "dup-row:{target}={source}"),
            Degeneracy::DupCol { target, source } => write!(f, "dup-col:{target}={source}"),
            Degeneracy::Kernel { line, dim } => write!(f, "kernel:{line}={dim}"),
        }
    }
}

/// A matrix with independent uniformly random coefficients.
pub fn random_matrix<F: Field, R: Rng + ?Sized>(
    field: &F,
    grading: Grading,
    m: usize,
    n: usize,
    rng: &mut R,
) -> Result<GradedLinearMatrix<F>, GenerateError> {
    if m == 0 || n == 0 || m > MAX_SIDE || n > MAX_SIDE {
        return Err(GenerateError::Size { m, n, max: MAX_SIDE });
    }
    let u = match grading {
        Grading::Row => n,
        Grading::Column => m,
    };
    let coeffs = (0..m).map(|_| (0..n).map(|_| (0..u).map(|_| field.random(rng)).collect()).collect()).collect();
    Ok(GradedLinearMatrix::new(field.clone(), grading, m, n, coeffs)?)
}

/// Apply one degeneracy, drawing any needed randomness from `rng`.
pub fn apply_degeneracy<F: Field, R: Rng + ?Sized>(
    l: &GradedLinearMatrix<F>,
    d: Degeneracy,
    rng: &mut R,
) -> Result<GradedLinearMatrix<F>, GenerateError> {
    let (m, n) = (l.m(), l.n());
    let f = l.field();
    let u = l.block_size();
    let mut c = l.coeffs().to_vec();
    let check = |k: usize, bound: usize, what: &str| {
        if k == 0 || k > bound {
            Err(GenerateError::OutOfRange(format!("{what} {k} outside 1..={bound}")))
        } else {
            Ok(k - 1)
        }
    };
    match d {
        Degeneracy::ZeroRow(i) => {
            let i = check(i, m, "row")?;
            c[i] = vec![vec![f.zero(); u]; n];
        }
        Degeneracy::ZeroCol(j) => {
            let j = check(j, n, "column")?;
            for row in c.iter_mut() {
                row[j] = vec![f.zero(); u];
            }
        }
        Degeneracy::DupRow { target, source } => {
            let (t, s) = (check(target, m, "row")?, check(source, m, "row")?);
            c[t] = c[s].clone();
        }
        Degeneracy::DupCol { target, source } => {
            let (t, s) = (check(target, n, "column")?, check(source, n, "column")?);
            for row in c.iter_mut() {
                row[t] = row[s].clone();
            }
        }
        Degeneracy::Kernel { line, dim } => {
            let lines = match l.grading() {
                Grading::Row => m,
                Grading::Column => n,
            };
            let k = check(line, lines, "line")?;
            let len = match l.grading() {
                Grading::Row => n,
                Grading::Column => m,
            };
            if dim > len {
                return Err(GenerateError::OutOfRange(format!("kernel dimension {dim} exceeds {len} entries")));
            }
            let entries = planted_line(f, u, len, dim, rng).ok_or(GenerateError::KernelFailed { line, dim })?;
            for (e, v) in entries.into_iter().enumerate() {
                match l.grading() {
                    Grading::Row => c[k][e] = v,
                    Grading::Column => c[e][k] = v,
                }
            }
        }
    }
    Ok(GradedLinearMatrix::new(f.clone(), l.grading(), m, n, c)?)
}

/// `len` vectors in `K^u` whose relation space has dimension exactly `dim`.
///
/// Draw a random `dim`-dimensional relation space `K`, then take the
/// coefficient matrix as a random combination of a basis of its annihilator,
/// so every relation in `K` holds by construction.
fn planted_line<F: Field, R: Rng + ?Sized>(
    f: &F,
    u: usize,
    len: usize,
    dim: usize,
    rng: &mut R,
) -> Option<Vec<Vec<F::Elem>>> {
    for _ in 0..KERNEL_ATTEMPTS {
        let rel_rows: Vec<Vec<F::Elem>> = (0..dim).map(|_| (0..len).map(|_| f.random(rng)).collect()).collect();
        let rel = DenseMatrix::from_rows(f.clone(), len, rel_rows).ok()?;
        if rel.rank() != dim {
            continue;
        }
        let ann = rel.kernel_basis();
        let mut mat = DenseMatrix::zeros(f.clone(), u, len);
        for r in 0..u {
            let weights: Vec<F::Elem> = (0..ann.len()).map(|_| f.random(rng)).collect();
            for e in 0..len {
                let v = weights.iter().zip(&ann).fold(f.zero(), |acc, (w, b)| f.add(&acc, &f.mul(w, &b[e])));
                mat.set(r, e, v);
            }
        }
        if len - mat.rank() != dim {
            continue;
        }
        return Some((0..len).map(|e| (0..u).map(|r| mat.get(r, e).clone()).collect()).collect());
    }
    None
}

/// A random instance from a seed, with degeneracies applied in order.
pub fn random_instance<F: Field>(
    field: &F,
    grading: Grading,
    m: usize,
    n: usize,
    seed: u64,
    degeneracies: &[Degeneracy],
) -> Result<GradedLinearMatrix<F>, GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut l = random_matrix(field, grading, m, n, &mut rng)?;
    for &d in degeneracies {
        l = apply_degeneracy(&l, d, &mut rng)?;
    }
    Ok(l)
}
