//! Ideals of 3-minors of matrices of variables. No closed form is known for
//! these; the report checks a few generators that must show up.

use crate::graded::matrix::k_subsets;
use crate::graded::{GradedLinearMatrix, Grading};
use crate::ideal::MonomialIdeal;
use crate::linalg::PrimeField;
use crate::poly::{Monomial, OrderKind, Polynomial, TermOrder};

use super::{gin, initial_ideal, GinOptions, OracleError};

/// Order of the variables of the 4×5 matrix for the lex computation,
/// largest first.
const LEX_4X5: [(usize, usize); 20] = [
    (1, 1),
    (2, 2),
    (3, 3),
    (4, 4),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (2, 1),
    (3, 2),
    (4, 3),
    (1, 3),
    (2, 4),
    (3, 5),
    (3, 1),
    (4, 2),
    (1, 4),
    (2, 5),
    (4, 1),
    (1, 5),
];

#[derive(Clone, Debug, PartialEq)]
pub struct ThreeMinorReport {
    /// Row-graded degrevlex gin of the 3-minors of a 4×4 matrix of variables.
    pub gin_4x4: MonomialIdeal,
    /// `x[1,1]^2*x[2,2]*x[3,2]*x[4,2]` is a minimal generator.
    pub has_square_generator_4x4: bool,
    pub radical_4x4: bool,
    /// Lex initial ideal of the 3-minors of a 4×5 matrix of variables.
    pub initial_4x5: MonomialIdeal,
    /// `x[1,2]*x[2,3]*x[3,1]*x[4,5]^2` and `x[1,2]*x[2,3]*x[3,1]*x[4,4]^2`
    /// are minimal generators.
    pub has_square_generators_4x5: [bool; 2],
}

fn three_minors(m: usize, n: usize) -> (GradedLinearMatrix<PrimeField>, Vec<Polynomial<PrimeField>>) {
    let x = GradedLinearMatrix::generic_variables(PrimeField::default(), Grading::Row, m, n).expect("nonempty shape");
    let mut out = Vec::new();
    for rows in k_subsets(m, 3) {
        for cols in k_subsets(n, 3) {
            out.push(x.minor(&rows, &cols).expect("3 is a supported minor size"));
        }
    }
    (x, out)
}

fn is_min_gen(i: &MonomialIdeal, text: &str) -> bool {
    let m = Monomial::parse(i.ring(), text).expect("variable names fit the ring");
    i.gens().contains(&m)
}

/// Runs both computations over `F_32003`.
pub fn three_minor_regression(opts: &GinOptions) -> Result<ThreeMinorReport, OracleError> {
    let field = PrimeField::default();

    let (x, gens) = three_minors(4, 4);
    let ring = x.ring();
    let gin_4x4 = gin(&gens, &ring, &TermOrder::degrevlex(), &field, opts)?.gin;

    let (x, gens) = three_minors(4, 5);
    let ring = x.ring();
    let ranking = LEX_4X5.iter().map(|&(i, j)| ring.var(i - 1, j - 1)).collect();
    let lex = TermOrder::with_ranking(OrderKind::Lex, ranking).expect("a permutation of the variables");
    let initial_4x5 = initial_ideal(&gens, &ring, &lex, &field, opts.limits)?;

    Ok(ThreeMinorReport {
        has_square_generator_4x4: is_min_gen(&gin_4x4, "x[1,1]^2*x[2,2]*x[3,2]*x[4,2]"),
        radical_4x4: gin_4x4.is_radical(),
        has_square_generators_4x5: [
            is_min_gen(&initial_4x5, "x[1,2]*x[2,3]*x[3,1]*x[4,5]^2"),
            is_min_gen(&initial_4x5, "x[1,2]*x[2,3]*x[3,1]*x[4,4]^2"),
        ],
        gin_4x4,
        initial_4x5,
    })
}
