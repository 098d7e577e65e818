use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::linalg::{subspace_intersection, DenseMatrix, Field, PrimeField, Rationals};
use crate::poly::{Multidegree, Polynomial, TermOrder};

fn random_matrix(grading: Grading, m: usize, n: usize, seed: u64) -> GradedLinearMatrix<PrimeField> {
    let f = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = match grading {
        Grading::Row => n,
        Grading::Column => m,
    };
    let coeffs = (0..m).map(|_| (0..n).map(|_| (0..u).map(|_| f.random(&mut rng)).collect()).collect()).collect();
    GradedLinearMatrix::new(f, grading, m, n, coeffs).unwrap()
}

fn with_row<F: Field>(l: &GradedLinearMatrix<F>, i: usize, row: Vec<Vec<F::Elem>>) -> GradedLinearMatrix<F> {
    let mut c = l.coeffs().to_vec();
    c[i] = row;
    GradedLinearMatrix::new(l.field().clone(), l.grading(), l.m(), l.n(), c).unwrap()
}

#[test]
fn entry_polys() {
    let q = Rationals;
    let zero = GradedLinearMatrix::new(q, Grading::Row, 1, 2, vec![vec![vec![q.zero(), q.zero()]; 2]]).unwrap();
    assert!(zero.entry_poly(0, 1).unwrap().is_zero());

    let gv = GradedLinearMatrix::generic_variables(q, Grading::Row, 2, 3).unwrap();
    let ring = gv.ring();
    assert_eq!(gv.entry_poly(0, 1).unwrap(), Polynomial::var(&q, 6, ring.var(0, 1)));

    let l = GradedLinearMatrix::new(
        q,
        Grading::Row,
        1,
        2,
        vec![vec![vec![q.from_i64(1), q.from_i64(2)], vec![q.zero(), q.one()]]],
    )
    .unwrap();
    let p = l.entry_poly(0, 0).unwrap();
    assert_eq!(p.render(&l.ring(), &q, &TermOrder::lex()), "x[1,1]+2*x[1,2]");
    assert!(matches!(l.entry_poly(1, 0), Err(GradedError::IndexOutOfRange { .. })));
}

#[test]
fn shape_is_validated() {
    let q = Rationals;
    let bad = GradedLinearMatrix::new(q, Grading::Row, 1, 2, vec![vec![vec![q.one()], vec![q.one(), q.one()]]]);
    assert!(matches!(bad, Err(GradedError::Shape(_))));
}

#[test]
fn column_span_examples() {
    let f = PrimeField::default();
    let zero = GradedLinearMatrix::new(f, Grading::Row, 2, 3, vec![vec![vec![0; 3]; 3]; 2]).unwrap();
    for a in 1..4 {
        assert_eq!(zero.column_span_dim(a).unwrap(), 0);
    }
    let l = random_matrix(Grading::Row, 2, 3, 1);
    assert_eq!(l.column_span_dim(0b01).unwrap(), 3);
    assert_eq!(l.column_span_dim(0b10).unwrap(), 3);
    assert_eq!(l.column_span_dim(0b11).unwrap(), 3);
    assert_eq!(l.column_span_dim(0).unwrap(), 0);

    let l = random_matrix(Grading::Row, 2, 2, 2);
    let l = with_row(&l, 1, vec![vec![0; 2]; 2]);
    assert_eq!(l.column_span_dim(0b11).unwrap(), l.column_span_dim(0b01).unwrap());

    let c = random_matrix(Grading::Column, 2, 3, 3);
    assert!(matches!(c.column_span_dim(1), Err(GradedError::WrongGrading { .. })));
}

#[test]
fn row_kernel_examples() {
    let f = PrimeField::default();
    let l = random_matrix(Grading::Row, 2, 3, 4);
    assert!(l.row_kernel(0).unwrap().is_empty());
    let z = with_row(&l, 1, vec![vec![0; 3]; 3]);
    assert_eq!(z.row_kernel(1).unwrap().len(), 3);

    // ℓ_11 = ℓ_12: (1, -1, 0) is a relation.
    let mut row = l.coeffs()[0].clone();
    row[1] = row[0].clone();
    let d = with_row(&l, 0, row);
    let ker = d.row_kernel(0).unwrap();
    assert_eq!(ker.len(), 1);
    let rel = vec![1, f.from_i64(-1), 0];
    let stacked = DenseMatrix::from_rows(f, 3, vec![ker[0].clone(), rel]).unwrap();
    assert_eq!(stacked.rank(), 1);
}

#[test]
fn phi_examples() {
    let l = random_matrix(Grading::Row, 3, 3, 5);
    let phi = l.phi_from_kernels().unwrap();
    assert!(phi.values().iter().all(|&v| v == 3));

    let z = with_row(&l, 0, vec![vec![0; 3]; 3]);
    let phi = z.phi_from_kernels().unwrap();
    for mask in 0..8 {
        assert_eq!(phi.get(mask), if mask & 1 == 1 { 0 } else { 3 });
    }

    // Row 1 with a one-dimensional kernel: ℓ_13 = ℓ_11 + ℓ_12.
    let f = PrimeField::default();
    let mut row = l.coeffs()[0].clone();
    row[2] = row[0].iter().zip(&row[1]).map(|(a, b)| f.add(a, b)).collect();
    let k = with_row(&l, 0, row);
    let phi = k.phi_from_kernels().unwrap();
    assert_eq!(phi.get(0b001), 2);
    assert_eq!(phi.get(0b011), 2);
    assert_eq!(phi.get(0b110), 3);
}

#[test]
fn maximal_minor_examples() {
    let q = Rationals;
    let l = GradedLinearMatrix::generic_variables(q, Grading::Row, 1, 3).unwrap();
    assert_eq!(l.maximal_minor(&[1]).unwrap(), l.entry_poly(0, 1).unwrap());

    let c = GradedLinearMatrix::generic_variables(q, Grading::Column, 2, 2).unwrap();
    let det = c.maximal_minor(&[0, 1]).unwrap();
    let ring = c.ring();
    assert_eq!(det.render(&ring, &q, &TermOrder::lex()), "x[1,1]*x[2,2]-x[2,1]*x[1,2]");
    assert_eq!(det.multidegree(&ring), Some(Multidegree(vec![1, 1])));

    // Repeating a column through the general minor gives zero.
    let r = random_matrix(Grading::Row, 2, 3, 6);
    assert!(r.minor(&[0, 1], &[2, 2]).unwrap().is_zero());
    assert!(matches!(r.maximal_minor(&[1, 0]), Err(GradedError::BadColumns(_))));
    let tall = random_matrix(Grading::Row, 3, 2, 6);
    assert!(matches!(tall.maximal_minor(&[0, 1]), Err(GradedError::TooManyRows { .. })));
}

#[test]
fn oversized_minors_are_rejected() {
    let l = random_matrix(Grading::Row, 7, 7, 7);
    let idx: Vec<usize> = (0..7).collect();
    assert_eq!(l.minor(&idx, &idx).unwrap_err(), GradedError::MinorTooLarge(7));
}

#[test]
fn nonzero_supports() {
    let l = random_matrix(Grading::Column, 2, 3, 8);
    assert_eq!(l.nonzero_minor_supports().unwrap(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);

    let mut c = l.coeffs().to_vec();
    for row in c.iter_mut() {
        row[2] = vec![0, 0];
    }
    let z = GradedLinearMatrix::new(*l.field(), Grading::Column, 2, 3, c).unwrap();
    assert_eq!(z.nonzero_minor_supports().unwrap(), vec![vec![0, 1]]);

    // Rows proportional on columns 1 and 2 kill exactly the minor [1,2].
    let f = PrimeField::default();
    let mut c = l.coeffs().to_vec();
    for j in 0..2 {
        c[1][j] = c[0][j].iter().map(|x| f.mul(x, &7)).collect();
    }
    let p = GradedLinearMatrix::new(f, Grading::Column, 2, 3, c).unwrap();
    assert_eq!(p.nonzero_minor_supports().unwrap(), vec![vec![0, 2], vec![1, 2]]);
}

#[test]
fn two_minor_examples() {
    let q = Rationals;
    let g = GradedLinearMatrix::generic_variables(q, Grading::Row, 2, 2).unwrap();
    let minors = g.all_two_minors().unwrap();
    assert_eq!(minors.len(), 1);
    assert_eq!(minors[0], g.maximal_minor(&[0, 1]).unwrap());

    let g = GradedLinearMatrix::generic_variables(q, Grading::Row, 2, 3).unwrap();
    assert_eq!(g.all_two_minors().unwrap().len(), 3);

    // Identical rows in a column-graded matrix: every minor through both vanishes.
    let l = random_matrix(Grading::Column, 3, 3, 9);
    let mut c = l.coeffs().to_vec();
    c[1] = c[0].clone();
    let d = GradedLinearMatrix::new(*l.field(), Grading::Column, 3, 3, c).unwrap();
    assert!(d.minor(&[0, 1], &[0, 2]).unwrap().is_zero());
    // Row pairs {1,3} and {2,3} keep their 3 minors each.
    assert_eq!(d.all_two_minors().unwrap().len(), 6);
}

#[test]
fn minors_are_alternating() {
    let f = PrimeField::default();
    for seed in 0..5 {
        let l = random_matrix(Grading::Row, 3, 4, 100 + seed);
        let a = l.minor(&[0, 1, 2], &[0, 2, 3]).unwrap();
        let b = l.minor(&[0, 1, 2], &[2, 0, 3]).unwrap();
        assert_eq!(a, b.neg(&f));
        assert!(a.is_homogeneous(&l.ring()));
    }
}

#[test]
fn span_dims_match_kernel_intersections() {
    // b_L(A) = n - dim ∩_{i∈A} V_i, checked with an independent intersection.
    let f = PrimeField::default();
    for seed in 0..6 {
        let mut l = random_matrix(Grading::Row, 3, 4, 200 + seed);
        // Plant a shared relation in rows 1 and 2 on some seeds.
        if seed % 2 == 0 {
            for i in 0..2 {
                let mut row = l.coeffs()[i].clone();
                row[3] = row[0].iter().zip(&row[1]).map(|(a, b)| f.sub(a, b)).collect();
                l = with_row(&l, i, row);
            }
        }
        let kernels: Vec<_> = (0..3).map(|i| l.row_kernel(i).unwrap()).collect();
        for mask in 1usize..8 {
            let mut inter: Option<Vec<Vec<u32>>> = None;
            for i in (0..3).filter(|i| mask >> i & 1 == 1) {
                inter = Some(match inter {
                    None => kernels[i].clone(),
                    Some(prev) => subspace_intersection(&f, 4, &prev, &kernels[i]).unwrap(),
                });
            }
            let dim = inter.unwrap().len();
            assert_eq!(l.column_span_dim(mask).unwrap(), 4 - dim, "mask {mask:#b} seed {seed}");
        }
    }
}

#[test]
fn span_dims_are_monotone_and_bounded() {
    for seed in 0..10 {
        let l = random_matrix(Grading::Row, 3, 3, 300 + seed);
        let l = if seed % 3 == 0 { with_row(&l, 1, vec![vec![0; 3]; 3]) } else { l };
        for a in 0usize..8 {
            let ba = l.column_span_dim(a).unwrap();
            assert!(ba <= 3);
            for b in 0usize..8 {
                if a & b == a {
                    assert!(ba <= l.column_span_dim(b).unwrap());
                }
            }
        }
        // Φ built from kernels always validates.
        l.phi_from_kernels().unwrap();
    }
}

#[test]
fn k_subsets_enumeration() {
    assert_eq!(k_subsets(4, 2).len(), 6);
    assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
    assert!(k_subsets(2, 3).is_empty());
}
