//! Division by a list of polynomials in a fixed term order.

use std::cmp::Ordering;

use crate::linalg::Field;

use super::monomial::Monomial;
use super::order::TermOrder;
use super::polynomial::Polynomial;

/// Terms sorted by descending `order`.
pub(crate) type OrderedTerms<F> = Vec<(Monomial, <F as Field>::Elem)>;

pub(crate) fn ordered<F: Field>(p: &Polynomial<F>, order: &TermOrder) -> OrderedTerms<F> {
    let mut t = p.terms().to_vec();
    t.sort_by(|a, b| order.compare(&b.0, &a.0));
    t
}

pub(crate) fn unordered<F: Field>(mut t: OrderedTerms<F>) -> Polynomial<F> {
    t.sort_by(|a, b| b.0.cmp(&a.0));
    Polynomial::from_sorted_unchecked(t)
}

/// `p - c * m * g`, all sorted by `order`.
pub(crate) fn sub_scaled<F: Field>(
    p: &[(Monomial, F::Elem)],
    c: &F::Elem,
    m: &Monomial,
    g: &[(Monomial, F::Elem)],
    order: &TermOrder,
    field: &F,
) -> OrderedTerms<F> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(t, a)| (t.mul(m), field.mul(a, c))).peekable();
    while i < p.len() {
        let Some((gm, _)) = gi.peek() else { break };
        match order.compare(&p[i].0, gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (gm, gc) = gi.next().unwrap();
                out.push((gm, field.neg(&gc)));
            }
            Ordering::Equal => {
                let (_, gc) = gi.next().unwrap();
                let v = field.sub(&p[i].1, &gc);
                if !field.is_zero(&v) {
                    out.push((p[i].0.clone(), v));
                }
                i += 1;
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    out.extend(gi.map(|(gm, gc)| (gm, field.neg(&gc))));
    out
}

/// Reducers with cached leading data.
pub(crate) struct Reducer<F: Field> {
    pub lm: Monomial,
    pub lc_inv: F::Elem,
    pub terms: OrderedTerms<F>,
}

impl<F: Field> Reducer<F> {
    pub fn new(terms: OrderedTerms<F>, field: &F) -> Self {
        let (lm, lc) = terms[0].clone();
        let lc_inv = field.inv(&lc).expect("leading coefficient is nonzero");
        Reducer { lm, lc_inv, terms }
    }
}

/// Full reduction of `p` by `reducers`: the first reducer whose leading
/// monomial divides the current term is used.
pub(crate) fn full_reduce<F: Field>(
    mut p: OrderedTerms<F>,
    reducers: &[&Reducer<F>],
    order: &TermOrder,
    field: &F,
) -> OrderedTerms<F> {
    let mut rem: OrderedTerms<F> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        match reducers.iter().find(|r| r.lm.divides(m)) {
            Some(r) => {
                let q = m.div(&r.lm).unwrap();
                let coef = field.mul(c, &r.lc_inv);
                p = sub_scaled(&p[start..], &coef, &q, &r.terms, order, field);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

/// Normal form of `f` modulo `divisors` (zero divisors are ignored).
///
/// No term of the result is divisible by a leading monomial of a divisor, and
/// `f - result` lies in the ideal they generate.
pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    order: &TermOrder,
    field: &F,
) -> Polynomial<F> {
    let reducers: Vec<Reducer<F>> =
        divisors.iter().filter(|g| !g.is_zero()).map(|g| Reducer::new(ordered(g, order), field)).collect();
    let refs: Vec<&Reducer<F>> = reducers.iter().collect();
    unordered(full_reduce(ordered(f, order), &refs, order, field))
}
