use proptest::prelude::*;

use super::*;
use crate::formulas::gin_maxminors_row;
use crate::generate::random_instance;
use crate::graded::Grading;
use crate::hilbert::standard_monomial_count;
use crate::linalg::{DenseMatrix, PrimeField, Rationals};
use crate::poly::{Monomial, Multidegree, OrderKind};

fn fp() -> PrimeField {
    PrimeField::default()
}

fn poly<F: Field>(field: &F, ring: &RingSpec, terms: &[(i64, &str)]) -> Polynomial<F> {
    Polynomial::from_terms(field, terms.iter().map(|&(c, m)| (Monomial::parse(ring, m).unwrap(), field.from_i64(c))))
}

fn ideal(ring: &RingSpec, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::parse(ring.clone(), gens).unwrap()
}

fn non_radical_example<F: Field>(field: &F, ring: &RingSpec) -> Vec<Polynomial<F>> {
    vec![
        poly(field, ring, &[(1, "x[1,1]*x[1,2]")]),
        poly(field, ring, &[(1, "x[1,1]*x[1,3]")]),
        poly(field, ring, &[(1, "x[1,1]^2"), (1, "x[1,4]^2")]),
    ]
}

#[test]
fn gin_of_a_non_radical_ideal() {
    let ring = RingSpec::new(vec![4]).unwrap();
    let expected = ideal(&ring, &["x[1,1]^2", "x[1,1]*x[1,2]", "x[1,2]^2", "x[1,1]*x[1,3]^2"]);
    let gens = non_radical_example(&fp(), &ring);
    let g = gin(&gens, &ring, &TermOrder::degrevlex(), &fp(), &GinOptions::default()).unwrap();
    assert_eq!(g.gin, expected);
    assert!(!g.gin.is_radical());

    let gens = non_radical_example(&Rationals, &ring);
    let g = gin(&gens, &ring, &TermOrder::degrevlex(), &Rationals, &GinOptions::with_seeds(vec![7, 8])).unwrap();
    assert_eq!(g.gin, expected);
}

#[test]
fn initial_ideal_without_change() {
    let ring = RingSpec::new(vec![4]).unwrap();
    let gens = non_radical_example(&fp(), &ring);
    let gb = buchberger(&gens, &TermOrder::degrevlex(), &fp(), Limits::default()).unwrap();
    assert!(gb.verify(&gens, &fp()));
    let ini = gb.initial_ideal(&ring);
    for m in ["x[1,1]^2", "x[1,1]*x[1,2]", "x[1,1]*x[1,3]"] {
        assert!(ini.contains(&Monomial::parse(&ring, m).unwrap()), "{m}");
    }
    // x2 * (x1^2 + x4^2) - x1 * (x1 x2) = x2 x4^2.
    assert!(ini.contains(&Monomial::parse(&ring, "x[1,2]*x[1,4]^2").unwrap()));
}

#[test]
fn linear_basis_is_triangular() {
    let ring = RingSpec::new(vec![3]).unwrap();
    let gens = vec![
        poly(&fp(), &ring, &[(1, "x[1,1]"), (-1, "x[1,2]")]),
        poly(&fp(), &ring, &[(1, "x[1,2]"), (-1, "x[1,3]")]),
    ];
    let gb = buchberger(&gens, &TermOrder::lex(), &fp(), Limits::default()).unwrap();
    assert_eq!(gb.initial_ideal(&ring), ideal(&ring, &["x[1,1]", "x[1,2]"]));
    // Reduced: x1 - x3 and x2 - x3.
    assert_eq!(gb.elements()[0], poly(&fp(), &ring, &[(1, "x[1,1]"), (-1, "x[1,3]")]));
    assert_eq!(gb.elements()[1], gens[1]);
}

#[test]
fn single_polynomial_is_normalized() {
    let ring = RingSpec::new(vec![2]).unwrap();
    let f = poly(&fp(), &ring, &[(3, "x[1,1]^2"), (6, "x[1,2]^2")]);
    let gb = buchberger(&[f], &TermOrder::degrevlex(), &fp(), Limits::default()).unwrap();
    assert_eq!(gb.elements(), &[poly(&fp(), &ring, &[(1, "x[1,1]^2"), (2, "x[1,2]^2")])]);
    assert!(buchberger::<PrimeField>(&[], &TermOrder::lex(), &fp(), Limits::default()).unwrap().elements().is_empty());
}

#[test]
fn generic_two_by_three_matches_formula_under_both_orders() {
    let l = random_instance(&fp(), Grading::Row, 2, 3, 17, &[]).unwrap();
    let ring = l.ring();
    let gens = l.maximal_minors().unwrap();
    let expected = ideal(&ring, &["x[1,1]*x[2,1]", "x[1,1]*x[2,2]", "x[1,2]*x[2,1]"]);
    assert_eq!(gin_maxminors_row(&l).unwrap().gin(), &expected);
    for order in [TermOrder::lex(), TermOrder::degrevlex(), TermOrder::deglex()] {
        assert_eq!(gin(&gens, &ring, &order, &fp(), &GinOptions::default()).unwrap().gin, expected);
    }
}

#[test]
fn gin_is_invariant_under_a_prior_change() {
    let l = random_instance(&fp(), Grading::Row, 3, 3, 4, &[]).unwrap();
    let ring = l.ring();
    let gens = l.all_two_minors().unwrap();
    let base = gin(&gens, &ring, &TermOrder::degrevlex(), &fp(), &GinOptions::default()).unwrap().gin;
    let moved = CoordinateChange::random(&fp(), &ring, 99).apply(&gens);
    let again = gin(&moved, &ring, &TermOrder::degrevlex(), &fp(), &GinOptions::with_seeds(vec![5, 6])).unwrap().gin;
    assert_eq!(base, again);
}

#[test]
fn borel_changes_fix_borel_ideals() {
    let ring = RingSpec::new(vec![3, 2]).unwrap();
    let i = ideal(&ring, &["x[1,1]^2", "x[1,1]*x[1,2]*x[2,1]", "x[2,1]^3"]);
    assert!(i.is_borel_fixed(0));
    let gens: Vec<Polynomial<PrimeField>> =
        i.gens().iter().map(|m| Polynomial::monomial(&fp(), m.clone(), fp().one())).collect();
    for seed in 0..4 {
        let moved = CoordinateChange::random_borel(&fp(), &ring, seed).apply(&gens);
        assert_eq!(initial_ideal(&moved, &ring, &TermOrder::degrevlex(), &fp(), Limits::default()).unwrap(), i);
    }
}

#[test]
fn change_validation() {
    let ring = RingSpec::new(vec![2]).unwrap();
    let singular = DenseMatrix::from_i64_rows(fp(), &[&[1, 2], &[2, 4]]).unwrap();
    assert_eq!(CoordinateChange::from_blocks(&ring, vec![singular]), Err(OracleError::NotInvertible(1)));
    assert!(matches!(CoordinateChange::<PrimeField>::from_blocks(&ring, vec![]), Err(OracleError::Shape(_))));
    let swap = DenseMatrix::from_i64_rows(fp(), &[&[0, 1], &[1, 0]]).unwrap();
    let g = CoordinateChange::from_blocks(&ring, vec![swap]).unwrap();
    let x1 = Polynomial::var(&fp(), 2, 0);
    assert_eq!(g.apply(&[x1]), vec![Polynomial::var(&fp(), 2, 1)]);
    let id = CoordinateChange::identity(&fp(), &ring);
    let f = poly(&fp(), &ring, &[(1, "x[1,1]^2"), (5, "x[1,2]")]);
    assert_eq!(id.apply(&[f.clone()]), vec![f]);
    assert_eq!(CoordinateChange::random(&fp(), &ring, 3), CoordinateChange::random(&fp(), &ring, 3));
}

#[test]
fn guards() {
    let ring = RingSpec::new(vec![4]).unwrap();
    let gens = non_radical_example(&fp(), &ring);
    let one_seed = GinOptions::with_seeds(vec![1]);
    assert_eq!(gin(&gens, &ring, &TermOrder::lex(), &fp(), &one_seed), Err(OracleError::TooFewSeeds(1)));
    let reversed = TermOrder::with_ranking(OrderKind::Lex, vec![3, 2, 1, 0]).unwrap();
    assert_eq!(gin(&gens, &ring, &reversed, &fp(), &GinOptions::default()), Err(OracleError::OrderBreaksBlocks));
    let tiny = Limits { max_pairs: 1, max_terms: 1_000_000 };
    assert_eq!(buchberger(&gens, &TermOrder::degrevlex(), &fp(), tiny), Err(OracleError::PairLimit(1)));
    let tiny = Limits { max_pairs: 50_000, max_terms: 3 };
    assert_eq!(buchberger(&gens, &TermOrder::degrevlex(), &fp(), tiny), Err(OracleError::TermLimit(3)));
}

#[test]
fn small_fields_can_be_unstable() {
    // Over F_2 the image of x1*x2 is x1*x2 or has leading term x1^2, and only
    // (x1^2) is Borel-fixed, so rounds either agree on it or fail.
    let f2 = PrimeField::new(2).unwrap();
    let ring = RingSpec::new(vec![2]).unwrap();
    let gens = vec![poly(&f2, &ring, &[(1, "x[1,1]*x[1,2]")])];
    match gin(&gens, &ring, &TermOrder::degrevlex(), &f2, &GinOptions::default()) {
        Ok(g) => assert_eq!(g.gin, ideal(&ring, &["x[1,1]^2"])),
        Err(e) => assert_eq!(e, OracleError::Unstable { attempts: 4 }),
    }
}

#[test]
fn three_minor_generators() {
    let r = three_minor_regression(&GinOptions::default()).unwrap();
    assert!(r.has_square_generator_4x4);
    assert!(!r.radical_4x4);
    assert_eq!(r.has_square_generators_4x5, [true, true]);
}

fn monomials_of_degree(nvars: usize, d: u16) -> Vec<Monomial> {
    if nvars == 1 {
        return vec![Monomial::from_exps(&[d])];
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for rest in monomials_of_degree(nvars - 1, d - e) {
            let mut exps = vec![e];
            exps.extend_from_slice(rest.exps());
            out.push(Monomial::from_exps(&exps));
        }
    }
    out
}

/// `dim_k I_d` by the rank of all degree-`d` multiples of the generators.
fn ideal_dimension(gens: &[Polynomial<PrimeField>], nvars: usize, d: u16) -> usize {
    let basis = monomials_of_degree(nvars, d);
    let col = |m: &Monomial| basis.iter().position(|b| b == m).unwrap();
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.terms()[0].0.degree() as u16;
        if gd > d {
            continue;
        }
        for q in monomials_of_degree(nvars, d - gd) {
            let mut row = vec![0u32; basis.len()];
            for (m, c) in g.terms() {
                row[col(&m.mul(&q))] = *c;
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return 0;
    }
    DenseMatrix::from_rows(fp(), basis.len(), rows).unwrap().rank()
}

fn homogeneous_poly(nvars: usize, deg: u16, coeffs: &[u32]) -> Polynomial<PrimeField> {
    let f = fp();
    Polynomial::from_terms(
        &f,
        monomials_of_degree(nvars, deg).into_iter().zip(coeffs.iter().map(|&c| f.from_i64(c as i64))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn initial_ideal_has_the_right_hilbert_function(
        specs in prop::collection::vec((1u16..4, prop::collection::vec(0u32..4, 20)), 1..4),
        lex in any::<bool>(),
    ) {
        let nvars = 3;
        let ring = RingSpec::new(vec![nvars]).unwrap();
        let gens: Vec<_> = specs.iter().map(|(d, c)| homogeneous_poly(nvars, *d, c)).filter(|p| !p.is_zero()).collect();
        let order = if lex { TermOrder::lex() } else { TermOrder::degrevlex() };
        let gb = buchberger(&gens, &order, &fp(), Limits::default()).unwrap();
        prop_assert!(gb.verify(&gens, &fp()));
        let ini = gb.initial_ideal(&ring);
        for d in 0..6u16 {
            let total = monomials_of_degree(nvars, d).len();
            let standard = standard_monomial_count(&ini, &Multidegree(vec![d as usize]), 1 << 20).unwrap() as usize;
            prop_assert_eq!(total - standard, ideal_dimension(&gens, nvars, d), "degree {}", d);
        }
    }

    #[test]
    fn oracle_gins_are_borel_fixed(seed in 0u64..1000, m in 2usize..4) {
        let l = random_instance(&fp(), Grading::Column, m, 3, seed, &[]).unwrap();
        let g = gin(&l.all_two_minors().unwrap(), &l.ring(), &TermOrder::degrevlex(), &fp(), &GinOptions::default()).unwrap();
        prop_assert!(g.gin.is_borel_fixed(fp().characteristic()));
    }
}
