use crate::ideal::MonomialIdeal;
use crate::linalg::Field;
use crate::poly::reduce::{full_reduce, ordered, sub_scaled, unordered, OrderedTerms, Reducer};
use crate::poly::{Monomial, Polynomial, RingSpec, TermOrder};

use super::OracleError;

/// Resource caps for [`buchberger`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// S-pairs reduced before giving up.
    pub max_pairs: usize,
    /// Total terms across the working basis.
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pairs: 50_000, max_terms: 1_000_000 }
    }
}

/// A reduced Gröbner basis: monic, sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    order: TermOrder,
    elements: Vec<Polynomial<F>>,
    leading: Vec<Monomial>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn initial_ideal(&self, ring: &RingSpec) -> MonomialIdeal {
        MonomialIdeal::minimalize(ring.clone(), self.leading.iter().cloned())
    }

    pub fn normal_form(&self, f: &Polynomial<F>, field: &F) -> Polynomial<F> {
        crate::poly::normal_form(f, &self.elements, &self.order, field)
    }

    /// Buchberger's criterion over all pairs, plus membership of `inputs`.
    pub fn verify(&self, inputs: &[Polynomial<F>], field: &F) -> bool {
        let reducers: Vec<Reducer<F>> =
            self.elements.iter().map(|g| Reducer::new(ordered(g, &self.order), field)).collect();
        let refs: Vec<&Reducer<F>> = reducers.iter().collect();
        for i in 0..reducers.len() {
            for j in i + 1..reducers.len() {
                let s = s_polynomial(&reducers[i], &reducers[j], &self.order, field);
                if !full_reduce(s, &refs, &self.order, field).is_empty() {
                    return false;
                }
            }
        }
        let auto_reduced = (0..reducers.len()).all(|i| {
            reducers[i].terms.iter().all(|(m, _)| (0..reducers.len()).all(|j| i == j || !reducers[j].lm.divides(m)))
        });
        auto_reduced && inputs.iter().all(|f| self.normal_form(f, field).is_zero())
    }
}

/// `(L / lm_a) a - (L / lm_b) b` for monic `a` and `b`.
fn s_polynomial<F: Field>(a: &Reducer<F>, b: &Reducer<F>, order: &TermOrder, field: &F) -> OrderedTerms<F> {
    let l = a.lm.lcm(&b.lm);
    let qa = l.div(&a.lm).expect("lcm is a multiple");
    let qb = l.div(&b.lm).expect("lcm is a multiple");
    let left: OrderedTerms<F> = a.terms.iter().map(|(m, c)| (m.mul(&qa), field.mul(c, &a.lc_inv))).collect();
    let right: OrderedTerms<F> = b.terms.iter().map(|(m, c)| (m.clone(), field.mul(c, &b.lc_inv))).collect();
    sub_scaled(&left, &field.one(), &qb, &right, order, field)
}

fn make_monic<F: Field>(t: OrderedTerms<F>, field: &F) -> OrderedTerms<F> {
    let inv = field.inv(&t[0].1).expect("leading coefficient is nonzero");
    t.into_iter().map(|(m, c)| (m, field.mul(&c, &inv))).collect()
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens` (zero inputs are
/// ignored), using the Gebauer-Möller criteria and the normal selection
/// strategy.
pub fn buchberger<F: Field>(
    gens: &[Polynomial<F>],
    order: &TermOrder,
    field: &F,
    limits: Limits,
) -> Result<GroebnerBasis<F>, OracleError> {
    let mut basis: Vec<Reducer<F>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut total_terms = 0usize;
    let mut processed = 0usize;

    let insert = |h: OrderedTerms<F>, basis: &mut Vec<Reducer<F>>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>| {
        let h = Reducer::new(make_monic(h, field), field);
        update(basis, active, pairs, &h);
        basis.push(h);
        active.push(true);
    };

    // Inputs are inter-reduced as they enter so the basis starts small.
    let mut inputs: Vec<OrderedTerms<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| ordered(g, order)).collect();
    inputs.sort_by(|a, b| a[0].0.degree().cmp(&b[0].0.degree()).then_with(|| order.compare(&a[0].0, &b[0].0)));
    for f in inputs {
        let refs: Vec<&Reducer<F>> = basis.iter().zip(&active).filter(|(_, &a)| a).map(|(r, _)| r).collect();
        let h = full_reduce(f, &refs, order, field);
        if !h.is_empty() {
            total_terms += h.len();
            insert(h, &mut basis, &mut active, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(OracleError::PairLimit(limits.max_pairs));
        }
        let k = select(&pairs, order);
        let p = pairs.swap_remove(k);
        let s = s_polynomial(&basis[p.i], &basis[p.j], order, field);
        let refs: Vec<&Reducer<F>> = basis.iter().zip(&active).filter(|(_, &a)| a).map(|(r, _)| r).collect();
        let h = full_reduce(s, &refs, order, field);
        if h.is_empty() {
            continue;
        }
        total_terms += h.len();
        if total_terms > limits.max_terms {
            return Err(OracleError::TermLimit(limits.max_terms));
        }
        insert(h, &mut basis, &mut active, &mut pairs);
    }

    // Inter-reduce the surviving elements into the reduced basis.
    let keep: Vec<usize> = (0..basis.len()).filter(|&i| active[i]).collect();
    let mut elements: Vec<OrderedTerms<F>> = Vec::with_capacity(keep.len());
    for &i in &keep {
        let others: Vec<&Reducer<F>> = keep.iter().filter(|&&j| j != i).map(|&j| &basis[j]).collect();
        let r = full_reduce(basis[i].terms.clone(), &others, order, field);
        elements.push(make_monic(r, field));
    }
    elements.sort_by(|a, b| order.compare(&b[0].0, &a[0].0));
    let leading = elements.iter().map(|t| t[0].0.clone()).collect();
    let elements: Vec<Polynomial<F>> = elements.into_iter().map(unordered).collect();
    let gb = GroebnerBasis { order: order.clone(), elements, leading };
    if gens.iter().any(|g| !gb.normal_form(g, field).is_zero()) {
        return Err(OracleError::Internal("an input does not reduce to zero".into()));
    }
    Ok(gb)
}

/// Normal strategy: smallest lcm by total degree, then by the order, then by
/// pair indices for determinism.
fn select(pairs: &[Pair], order: &TermOrder) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k], &pairs[best]);
        let c = a
            .lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| order.compare(&a.lcm, &b.lcm))
            .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
        if c.is_lt() {
            best = k;
        }
    }
    best
}

/// The Gebauer-Möller update for a new element `h` (index `basis.len()`).
fn update<F: Field>(basis: &[Reducer<F>], active: &mut [bool], pairs: &mut Vec<Pair>, h: &Reducer<F>) {
    let hi = basis.len();
    let candidates: Vec<Pair> =
        (0..basis.len()).filter(|&g| active[g]).map(|g| Pair { i: g, j: hi, lcm: h.lm.lcm(&basis[g].lm) }).collect();

    // Chain criterion among the new pairs; coprime pairs stay as witnesses.
    let mut kept: Vec<Pair> = Vec::new();
    for (k, c) in candidates.iter().enumerate() {
        let coprime = h.lm.is_coprime(&basis[c.i].lm);
        let dominated = candidates[k + 1..].iter().chain(kept.iter()).any(|o| o.lcm.divides(&c.lcm));
        if coprime || !dominated {
            kept.push(c.clone());
        }
    }
    // Product criterion.
    kept.retain(|c| !h.lm.is_coprime(&basis[c.i].lm));

    // Old pairs whose lcm is divisible by lm(h) with both new lcms different.
    pairs.retain(|p| {
        if !h.lm.divides(&p.lcm) {
            return true;
        }
        let a = h.lm.lcm(&basis[p.i].lm);
        let b = h.lm.lcm(&basis[p.j].lm);
        a == p.lcm || b == p.lcm
    });
    pairs.extend(kept);

    for (g, flag) in active.iter_mut().enumerate() {
        if *flag && h.lm.divides(&basis[g].lm) {
            *flag = false;
        }
    }
}
