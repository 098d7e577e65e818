//! Closed forms checked against the Gröbner oracle on one matrix.

use serde::Serialize;

use crate::formulas::{gin_2minors, gin_maxminors_col, gin_maxminors_row, Formula, FormulaError, GinResult};
use crate::graded::{GradedLinearMatrix, Grading};
use crate::hilbert::{h_phi_series, series_of_quotient, HilbertError, TruncatedMultiSeries, DEFAULT_ENUMERATION_LIMIT};
use crate::ideal::{intersect, IdealError, MonomialIdeal};
use crate::linalg::Field;
use crate::oracle::{gin, GinOptions, OracleError};
use crate::poly::{OrderKind, TermOrder};

/// Hilbert coefficients are compared up to this total degree by default.
pub const DEFAULT_VERIFY_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("no closed form applies to a {m}x{n} {grading:?}-graded matrix")]
    NothingToCheck { m: usize, n: usize, grading: Grading },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaReport {
    pub formula: Formula,
    pub checks: Vec<Check>,
    pub formula_gin: Vec<String>,
    pub oracle_gin: Vec<String>,
    pub seeds: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub order: OrderKind,
    pub cap: usize,
    pub results: Vec<FormulaReport>,
}

/// Closed forms that apply to `l`: maximal minors when `m <= n`, and
/// 2-minors for row-graded matrices with at least two rows and columns.
pub fn applicable_formulas<F: Field>(l: &GradedLinearMatrix<F>) -> Vec<Formula> {
    let (m, n) = (l.m(), l.n());
    let mut out = Vec::new();
    match l.grading() {
        Grading::Row => {
            if m <= n {
                out.push(Formula::RowMaximalMinors);
            }
            if m >= 2 && n >= 2 {
                out.push(Formula::TwoMinors);
            }
        }
        Grading::Column => {
            if m <= n {
                out.push(Formula::ColumnMaximalMinors);
            }
        }
    }
    out
}

fn check(name: &'static str, pass: bool, detail: impl FnOnce() -> String) -> Check {
    Check { name, pass, detail: (!pass).then(detail) }
}

fn diff_series(a: &TruncatedMultiSeries, b: &TruncatedMultiSeries) -> String {
    for (deg, c) in a.terms() {
        if b.get(deg) != c {
            return format!("coefficient at {deg:?}: {c} vs {}", b.get(deg));
        }
    }
    for (deg, c) in b.terms() {
        if a.get(deg) != c {
            return format!("coefficient at {deg:?}: {} vs {c}", a.get(deg));
        }
    }
    String::new()
}

/// The checks for one closed form against an oracle gin.
pub fn compare<F: Field>(
    l: &GradedLinearMatrix<F>,
    result: &GinResult,
    oracle: &MonomialIdeal,
    cap: usize,
) -> Result<Vec<Check>, VerifyError> {
    let ring = result.ring();
    let ours = result.gin();
    let mut checks = vec![
        check("ideal-equality", ours == oracle, || {
            format!("formula {:?} vs oracle {:?}", ours.render_gens(), oracle.render_gens())
        }),
        check("radical", ours.is_radical(), || "formula gin is not squarefree".into()),
        check("borel-fixed", ours.is_borel_fixed(0) && oracle.is_borel_fixed(l.field().characteristic()), || {
            "a gin is not Borel-fixed".into()
        }),
    ];

    let prime_ideals = result.primes().iter().map(|p| p.to_ideal(ring)).collect::<Result<Vec<_>, _>>()?;
    let meet =
        if prime_ideals.is_empty() { MonomialIdeal::zero(ring.clone()) } else { intersect(ring, &prime_ideals)? };
    let mut listed: Vec<Vec<usize>> = result.primes().iter().map(|p| p.vars(ring)).collect::<Result<_, _>>()?;
    listed.sort();
    let mut minimal = if oracle.is_radical() { oracle.minimal_primes_squarefree()? } else { Vec::new() };
    minimal.sort();
    checks.push(check("prime-intersection", meet == *oracle && listed == minimal, || {
        format!("{} primes listed, {} minimal primes of the oracle gin", listed.len(), minimal.len())
    }));

    let theirs = series_of_quotient(oracle, cap, DEFAULT_ENUMERATION_LIMIT)?;
    let expected = match result.formula() {
        Formula::TwoMinors => {
            let phi = l.phi_from_kernels().map_err(FormulaError::from)?;
            let free: Vec<usize> = (0..l.m()).map(|i| l.n() - phi.get(1 << i)).collect();
            h_phi_series(&phi, cap)?.with_free_variables(&free)?
        }
        _ => series_of_quotient(ours, cap, DEFAULT_ENUMERATION_LIMIT)?,
    };
    checks.push(check("hilbert", expected == theirs, || diff_series(&expected, &theirs)));
    Ok(checks)
}

/// Runs every applicable closed form and the oracle on the same generators.
pub fn verify<F: Field>(
    l: &GradedLinearMatrix<F>,
    order: &TermOrder,
    opts: &GinOptions,
    cap: usize,
) -> Result<VerifyReport, VerifyError> {
    let formulas = applicable_formulas(l);
    if formulas.is_empty() {
        return Err(VerifyError::NothingToCheck { m: l.m(), n: l.n(), grading: l.grading() });
    }
    let ring = l.ring();
    let mut results = Vec::new();
    for f in formulas {
        let (result, gens) = match f {
            Formula::TwoMinors => (gin_2minors(l)?, l.all_two_minors().map_err(FormulaError::from)?),
            Formula::ColumnMaximalMinors => (gin_maxminors_col(l)?, l.maximal_minors().map_err(FormulaError::from)?),
            _ => (gin_maxminors_row(l)?, l.maximal_minors().map_err(FormulaError::from)?),
        };
        let oracle = gin(&gens, &ring, order, l.field(), opts)?;
        let checks = compare(l, &result, &oracle.gin, cap)?;
        results.push(FormulaReport {
            formula: f,
            checks,
            formula_gin: result.gin().render_gens(),
            oracle_gin: oracle.gin.render_gens(),
            seeds: oracle.seeds,
        });
    }
    let passed = results.iter().all(|r| r.checks.iter().all(|c| c.pass));
    Ok(VerifyReport { passed, order: order.kind(), cap, results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_instance, Degeneracy};
    use crate::linalg::PrimeField;

    fn run(g: Grading, m: usize, n: usize, seed: u64, d: &[Degeneracy]) -> VerifyReport {
        let l = random_instance(&PrimeField::default(), g, m, n, seed, d).unwrap();
        verify(&l, &TermOrder::degrevlex(), &GinOptions::default(), DEFAULT_VERIFY_CAP).unwrap()
    }

    #[test]
    fn generic_instances_pass() {
        let r = run(Grading::Row, 2, 3, 1, &[]);
        assert!(r.passed, "{r:?}");
        assert_eq!(r.results.len(), 2);
        let r = run(Grading::Row, 3, 4, 2, &[]);
        assert!(r.passed, "{r:?}");
        let r = run(Grading::Column, 2, 4, 3, &[]);
        assert!(r.passed, "{r:?}");
        assert_eq!(r.results[0].formula, Formula::ColumnMaximalMinors);
    }

    #[test]
    fn degenerate_instances_pass() {
        let r = run(Grading::Row, 3, 3, 4, &[Degeneracy::DupRow { target: 2, source: 1 }]);
        assert!(r.passed, "{r:?}");
        let r = run(Grading::Row, 3, 3, 5, &[Degeneracy::Kernel { line: 1, dim: 2 }]);
        assert!(r.passed, "{r:?}");
        let r = run(Grading::Column, 2, 3, 6, &[Degeneracy::ZeroCol(2)]);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn a_wrong_formula_is_caught() {
        let l = random_instance(&PrimeField::default(), Grading::Row, 2, 3, 1, &[]).unwrap();
        let right = gin_maxminors_row(&l).unwrap();
        // The gin of a 2x2 submatrix is strictly smaller.
        let sub = random_instance(&PrimeField::default(), Grading::Row, 2, 3, 1, &[Degeneracy::ZeroCol(3)]).unwrap();
        let small = gin_maxminors_row(&sub).unwrap();
        let checks = compare(&l, &small, right.gin(), 3).unwrap();
        assert!(!checks[0].pass);
        assert!(checks[0].detail.is_some());
        assert!(compare(&l, &right, right.gin(), 3).unwrap().iter().all(|c| c.pass));
    }

    #[test]
    fn nothing_to_check() {
        let l = random_instance(&PrimeField::default(), Grading::Column, 3, 2, 1, &[]).unwrap();
        assert!(matches!(
            verify(&l, &TermOrder::lex(), &GinOptions::default(), 2),
            Err(VerifyError::NothingToCheck { .. })
        ));
    }
}
