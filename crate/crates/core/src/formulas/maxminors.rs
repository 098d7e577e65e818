use crate::graded::{GradedLinearMatrix, Grading};
use crate::ideal::{BorelPrime, IdealError, MonomialIdeal};
use crate::linalg::Field;
use crate::poly::{Monomial, RingSpec};

use super::{for_each_vector, normalize_primes, Formula, FormulaError, GinResult};

fn require_row<F: Field>(l: &GradedLinearMatrix<F>) -> Result<(), FormulaError> {
    if l.grading() != Grading::Row {
        return Err(crate::graded::GradedError::WrongGrading { expected: Grading::Row, found: l.grading() }.into());
    }
    if l.m() > l.n() {
        return Err(FormulaError::TooManyRows { m: l.m(), n: l.n() });
    }
    Ok(())
}

/// `x[1,a_1] ··· x[m,a_m]` with one-based `a`.
fn transversal(ring: &RingSpec, a: &[usize]) -> Monomial {
    let vars: Vec<usize> = a.iter().enumerate().map(|(i, &ai)| ring.var(i, ai - 1)).collect();
    Monomial::from_vars(ring.nvars(), &vars)
}

/// Every `a` with `a_i = 0` off `mask` and `Σ a_i = total`, bounded by `cap`.
fn supported_vectors(m: usize, mask: usize, total: usize, cap: usize, out: &mut Vec<BorelPrime>) {
    let hi: Vec<usize> = (0..m).map(|i| if mask >> i & 1 == 1 { cap.min(total) } else { 0 }).collect();
    for_each_vector(&vec![0; m], &hi, |a| {
        if a.iter().sum::<usize>() == total {
            out.push(BorelPrime::new(a.to_vec()));
        }
    });
}

/// Gin of the maximal minors of a row-graded matrix, from the column-span
/// dimensions `b_L(A)`.
pub fn gin_maxminors_row<F: Field>(l: &GradedLinearMatrix<F>) -> Result<GinResult, FormulaError> {
    require_row(l)?;
    let (m, n) = (l.m(), l.n());
    let ring = l.ring();
    let b: Vec<usize> = (0..1usize << m).map(|mask| l.column_span_dim(mask)).collect::<Result<_, _>>()?;

    let caps: Vec<usize> = (0..m).map(|i| b[1 << i]).collect();
    let mut gens = Vec::new();
    for_each_vector(&vec![1; m], &caps, |a| {
        let ok = (1..1usize << m).all(|mask| {
            let s: usize = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| a[i]).sum();
            s <= b[mask]
        });
        if ok {
            gens.push(transversal(&ring, a));
        }
    });
    let gin = MonomialIdeal::minimalize(ring, gens);

    let mut primes = Vec::new();
    for mask in 1..1usize << m {
        let size = mask.count_ones() as usize;
        if b[mask] + 1 < size {
            continue;
        }
        supported_vectors(m, mask, b[mask] + 1 - size, n, &mut primes);
    }
    GinResult::new(gin, normalize_primes(primes), Formula::RowMaximalMinors)
}

/// The maximal-codimension form: valid only when the ideal of maximal
/// minors has codimension `n - m + 1`, which is checked first.
pub fn gin_maxminors_row_maxcodim<F: Field>(l: &GradedLinearMatrix<F>) -> Result<GinResult, FormulaError> {
    require_row(l)?;
    let (m, n) = (l.m(), l.n());
    let expected = n - m + 1;
    let actual = gin_maxminors_row(l)?.codim();
    if actual != expected {
        return Err(FormulaError::NotMaxCodim { expected, actual });
    }
    let ring = l.ring();
    let mut gens = Vec::new();
    for_each_vector(&vec![1; m], &vec![n; m], |a| {
        if a.iter().sum::<usize>() <= n {
            gens.push(transversal(&ring, a));
        }
    });
    let gin = MonomialIdeal::minimalize(ring, gens);
    let mut primes = Vec::new();
    supported_vectors(m, (1 << m) - 1, expected, n, &mut primes);
    GinResult::new(gin, normalize_primes(primes), Formula::RowMaximalMinorsMaxCodim)
}

/// Gin of the maximal minors of a column-graded matrix: products of the top
/// variables `x[1,j]` over the column sets of nonzero minors, decomposed by
/// minimal vertex covers.
pub fn gin_maxminors_col<F: Field>(l: &GradedLinearMatrix<F>) -> Result<GinResult, FormulaError> {
    if l.grading() != Grading::Column {
        return Err(crate::graded::GradedError::WrongGrading { expected: Grading::Column, found: l.grading() }.into());
    }
    let (m, n) = (l.m(), l.n());
    if m > n {
        return Err(FormulaError::TooManyRows { m, n });
    }
    let ring = l.ring();
    let nv = ring.nvars();
    let gens = l.nonzero_minor_supports()?.into_iter().map(|cols| {
        let vars: Vec<usize> = cols.iter().map(|&j| ring.var(j, 0)).collect();
        Monomial::from_vars(nv, &vars)
    });
    let gin = MonomialIdeal::minimalize(ring.clone(), gens);
    let primes = column_covers(&gin, &ring, n)?;
    GinResult::new(gin, primes, Formula::ColumnMaximalMinors)
}

fn column_covers(gin: &MonomialIdeal, ring: &RingSpec, n: usize) -> Result<Vec<BorelPrime>, FormulaError> {
    if gin.is_zero() {
        return Ok(Vec::new());
    }
    // Re-read the gin in a ring with one variable per column.
    let top = RingSpec::new(vec![1; n]).map_err(IdealError::from)?;
    let small = MonomialIdeal::minimalize(
        top,
        gin.gens().iter().map(|g| {
            let cols: Vec<usize> = g.support().into_iter().map(|v| ring.var_id(v).block).collect();
            Monomial::from_vars(n, &cols)
        }),
    );
    Ok(small
        .minimal_primes_squarefree()?
        .into_iter()
        .map(|cols| {
            let mut c = vec![0; n];
            for j in cols {
                c[j] = 1;
            }
            BorelPrime::new(c)
        })
        .collect())
}
