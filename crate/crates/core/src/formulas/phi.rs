use crate::graded::{GradedError, GradedLinearMatrix, Grading, PhiMap};
use crate::ideal::{BorelPrime, IdealError, MonomialIdeal};
use crate::linalg::Field;
use crate::poly::{Monomial, RingSpec};

use super::{for_each_vector, normalize_primes, Formula, FormulaError, GinResult};

fn mask_members(m: usize, mask: usize) -> impl Iterator<Item = usize> {
    (0..m).filter(move |i| mask >> i & 1 == 1)
}

/// Products `Π_{i∈A} x[i,b_i]` for every nonempty `A` and `1 <= b_i <= caps[i]`
/// accepted by `keep(A, b)`.
fn block_products(ring: &RingSpec, caps: &[usize], mut keep: impl FnMut(usize, &[usize]) -> bool) -> Vec<Monomial> {
    let m = caps.len();
    let mut gens = Vec::new();
    for mask in 1..1usize << m {
        let members: Vec<usize> = mask_members(m, mask).collect();
        let hi: Vec<usize> = members.iter().map(|&i| caps[i]).collect();
        for_each_vector(&vec![1; members.len()], &hi, |b| {
            if keep(mask, b) {
                let vars: Vec<usize> = members.iter().zip(b).map(|(&i, &bi)| ring.var(i, bi - 1)).collect();
                gens.push(Monomial::from_vars(ring.nvars(), &vars));
            }
        });
    }
    gens
}

/// The radical Borel-fixed ideal attached to `Φ`, in any ring whose block
/// `i` has at least `d_i = Φ({i})` variables.
pub fn borel_ideal_in(phi: &PhiMap, ring: &RingSpec) -> Result<MonomialIdeal, FormulaError> {
    let caps = phi.caps();
    if ring.blocks() != caps.len() || caps.iter().enumerate().any(|(i, &d)| ring.block_size(i) < d) {
        return Err(IdealError::RingMismatch.into());
    }
    let gens = block_products(ring, &caps, |mask, b| {
        let slack: usize = mask_members(caps.len(), mask).zip(b).map(|(i, &bi)| caps[i] - bi).sum();
        slack >= phi.get(mask)
    });
    Ok(MonomialIdeal::minimalize(ring.clone(), gens))
}

/// The ideal attached to `Φ` in its own ring, with `d_i = Φ({i})` variables in
/// block `i` (possibly none).
pub fn borel_ideal_from_phi(phi: &PhiMap) -> Result<MonomialIdeal, FormulaError> {
    borel_ideal_in(phi, &RingSpec::allowing_empty_blocks(phi.caps()))
}

/// Whether `P_v` contains the ideal attached to `Φ`.
pub fn prime_containment_predicate(v: &[usize], phi: &PhiMap) -> Result<bool, FormulaError> {
    let d = phi.caps();
    if v.len() != d.len() || v.iter().zip(&d).any(|(x, y)| x > y) {
        return Err(FormulaError::VectorOutOfRange(format!("{v:?} is not bounded by {d:?}")));
    }
    let (lhs, rhs) = containment_sides(v, &d, phi);
    Ok(lhs >= rhs)
}

/// `(Σ v_i, Σ d_i - Φ(A(v)) - |A(v)| + 1)` with `A(v) = { i : v_i < d_i }`.
fn containment_sides(v: &[usize], d: &[usize], phi: &PhiMap) -> (i64, i64) {
    let a = a_of(v, d);
    let lhs = v.iter().sum::<usize>() as i64;
    let rhs = d.iter().sum::<usize>() as i64 - phi.get(a) as i64 - a.count_ones() as i64 + 1;
    (lhs, rhs)
}

fn a_of(v: &[usize], d: &[usize]) -> usize {
    v.iter().zip(d).enumerate().filter(|(_, (x, y))| x < y).fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Irredundant prime decomposition of the ideal attached to `Φ`: the `P_v`
/// meeting the containment inequality with equality and with `Φ` strictly
/// dropping on every proper superset of `A(v)`. Empty for the zero ideal.
pub fn primes_from_phi(phi: &PhiMap) -> Vec<BorelPrime> {
    let d = phi.caps();
    let m = d.len();
    let mut out = Vec::new();
    for_each_vector(&vec![0; m], &d, |v| {
        let (lhs, rhs) = containment_sides(v, &d, phi);
        if lhs != rhs {
            return;
        }
        let a = a_of(v, &d);
        // Monotonicity reduces the superset condition to one-element extensions.
        let drops = (0..m).filter(|i| a >> i & 1 == 0).all(|i| phi.get(a | 1 << i) < phi.get(a));
        if drops {
            out.push(BorelPrime::new(v.to_vec()));
        }
    });
    out.retain(|p| !p.is_zero());
    out
}

/// Gin of the 2-minors of a row-graded matrix from the row kernels `V_i`,
/// read in the full ring with `n` variables per block.
pub fn gin_2minors<F: Field>(l: &GradedLinearMatrix<F>) -> Result<GinResult, FormulaError> {
    if l.grading() != Grading::Row {
        return Err(GradedError::WrongGrading { expected: Grading::Row, found: l.grading() }.into());
    }
    let (m, n) = (l.m(), l.n());
    let dims = l.kernel_sum_dims()?;
    let phi = l.phi_from_kernels()?;
    let ring = l.ring();
    let gin = borel_ideal_in(&phi, &ring)?;

    // Same ideal from the kernel-dimension form of the inequality.
    let caps: Vec<usize> = (0..m).map(|i| n - dims[1 << i]).collect();
    let direct = block_products(&ring, &caps, |mask, b| {
        let size = mask.count_ones() as i64;
        let singles: i64 = mask_members(m, mask).map(|i| dims[1 << i] as i64).sum();
        let bound = n as i64 * (size - 1) + dims[mask] as i64 - singles;
        b.iter().sum::<usize>() as i64 <= bound
    });
    if MonomialIdeal::minimalize(ring, direct) != gin {
        return Err(FormulaError::Inconsistent("kernel-dimension form disagrees with the Φ form".into()));
    }

    let primes = normalize_primes(primes_from_phi(&phi));
    GinResult::new(gin, primes, Formula::TwoMinors)
}
