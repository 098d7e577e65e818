use std::collections::HashMap;

use crate::linalg::Field;

use super::monomial::Monomial;
use super::order::TermOrder;
use super::ring::{Multidegree, RingSpec};
use super::PolyError;

/// Sparse polynomial: terms sorted by descending canonical (lex) monomial
/// order, no zero coefficients, no repeated monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Default for Polynomial<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        Self::monomial(field, Monomial::one(nvars), c)
    }

    pub fn monomial(field: &F, m: Monomial, c: F::Elem) -> Self {
        if field.is_zero(&c) {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(field: &F, nvars: usize, v: usize) -> Self {
        Self::monomial(field, Monomial::var(nvars, v), field.one())
    }

    /// Normalizes arbitrary terms: combines repeats, drops zeros, sorts.
    pub fn from_terms(field: &F, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    /// Trusts the caller: terms already sorted descending with no zeros.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms.binary_search_by(|(t, _)| m.cmp(t)).ok().map(|i| &self.terms[i].1)
    }

    pub fn add(&self, other: &Self, field: &F) -> Self {
        self.merge(other, field, |_, c| c.clone(), |f, a, b| f.add(a, b), |_, c| c.clone())
    }

    pub fn sub(&self, other: &Self, field: &F) -> Self {
        self.merge(other, field, |_, c| c.clone(), |f, a, b| f.sub(a, b), |f, c| f.neg(c))
    }

    fn merge(
        &self,
        other: &Self,
        field: &F,
        left: impl Fn(&F, &F::Elem) -> F::Elem,
        both: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem,
        right: impl Fn(&F, &F::Elem) -> F::Elem,
    ) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push((a[i].0.clone(), left(field, &a[i].1)));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), right(field, &b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = both(field, &a[i].1, &b[j].1);
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().map(|(m, c)| (m.clone(), left(field, c))));
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), right(field, c))));
        Polynomial { terms: out }
    }

    pub fn neg(&self, field: &F) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect() }
    }

    pub fn scalar_mul(&self, c: &F::Elem, field: &F) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect() }
    }

    /// Multiplication by a monomial preserves the lex order of terms.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem, field: &F) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(t, a)| (t.mul(m), field.mul(a, c))).collect() }
    }

    pub fn mul(&self, other: &Self, field: &F) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = field.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    pub fn pow(&self, e: u32, field: &F, nvars: usize) -> Self {
        let mut acc = Self::constant(field, nvars, field.one());
        for _ in 0..e {
            acc = acc.mul(self, field);
        }
        acc
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &TermOrder) -> Result<(&Monomial, &F::Elem), PolyError> {
        self.terms.iter().max_by(|a, b| order.compare(&a.0, &b.0)).map(|(m, c)| (m, c)).ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<&Monomial, PolyError> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scale so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &TermOrder, field: &F) -> Self {
        match self.leading_term(order) {
            Err(_) => Self::zero(),
            Ok((_, c)) => {
                let inv = field.inv(c).expect("nonzero leading coefficient");
                self.scalar_mul(&inv, field)
            }
        }
    }

    /// The common multidegree of all terms, if the polynomial is homogeneous
    /// for the block grading. The zero polynomial is reported as `None`.
    pub fn multidegree(&self, ring: &RingSpec) -> Option<Multidegree> {
        let mut it = self.terms.iter().map(|(m, _)| m.multidegree(ring));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self, ring: &RingSpec) -> bool {
        self.is_zero() || self.multidegree(ring).is_some()
    }

    /// Substitute `images[v]` for variable `v`.
    pub fn substitute(&self, images: &[Polynomial<F>], field: &F, nvars: usize) -> Self {
        let mut out = Self::zero();
        // Cache powers of each image; exponents stay small here.
        let mut powers: HashMap<(usize, u16), Polynomial<F>> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Self::constant(field, nvars, c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers.entry((v, e)).or_insert_with(|| images[v].pow(e as u32, field, nvars)).clone();
                t = t.mul(&p, field);
            }
            out = out.add(&t, field);
        }
        out
    }

    /// Text form with terms in descending `order`, e.g. `x[1,1]*x[2,2]-x[1,2]*x[2,1]`.
    pub fn render(&self, ring: &RingSpec, field: &F, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let one = field.one();
        let mut s = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            // Only rationals carry a sign; prime-field elements print as residues.
            let neg = field.characteristic() == 0 && field.format(c).starts_with('-');
            let mag = if neg { field.neg(c) } else { c.clone() };
            if i > 0 {
                s.push(if neg { '-' } else { '+' });
            } else if neg {
                s.push('-');
            }
            let mono = m.render(ring);
            if mag == one {
                s.push_str(&mono);
            } else if m.is_one() {
                s.push_str(&field.format(&mag));
            } else {
                s.push_str(&field.format(&mag));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    fn ring22() -> RingSpec {
        RingSpec::new(vec![2, 2]).unwrap()
    }

    #[test]
    fn add_zero_is_identity() {
        let q = Rationals;
        let f = Polynomial::var(&q, 4, 0).add(&Polynomial::var(&q, 4, 3), &q);
        assert_eq!(f.add(&Polynomial::zero(), &q), f);
        assert!(f.sub(&f, &q).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let q = Rationals;
        let x = Polynomial::var(&q, 4, 0);
        let y = Polynomial::var(&q, 4, 1);
        let lhs = x.add(&y, &q).mul(&x.sub(&y, &q), &q);
        let rhs = x.mul(&x, &q).sub(&y.mul(&y, &q), &q);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 2);
    }

    #[test]
    fn two_by_two_determinant() {
        let q = Rationals;
        let r = ring22();
        let v = |b, i| Polynomial::var(&q, 4, r.var(b, i));
        let det = v(0, 0).mul(&v(1, 1), &q).sub(&v(0, 1).mul(&v(1, 0), &q), &q);
        assert_eq!(det.render(&r, &q, &TermOrder::lex()), "x[1,1]*x[2,2]-x[1,2]*x[2,1]");
        assert_eq!(det.multidegree(&r), Some(Multidegree(vec![1, 1])));
        let (lm, _) = det.leading_term(&TermOrder::lex()).unwrap();
        assert_eq!(lm.render(&r), "x[1,1]*x[2,2]");
    }

    #[test]
    fn leading_term_of_zero_errors() {
        let p: Polynomial<PrimeField> = Polynomial::zero();
        assert_eq!(p.leading_term(&TermOrder::lex()).unwrap_err(), PolyError::ZeroPolynomial);
    }

    #[test]
    fn revlex_leading_term_breaks_degree_tie() {
        let f = PrimeField::default();
        let x1sq = Polynomial::monomial(&f, Monomial::from_exps(&[2, 0, 0, 0]), 1);
        let x4sq = Polynomial::monomial(&f, Monomial::from_exps(&[0, 0, 0, 2]), 1);
        let p = x1sq.add(&x4sq, &f);
        assert_eq!(p.leading_monomial(&TermOrder::degrevlex()).unwrap(), &Monomial::from_exps(&[2, 0, 0, 0]));
    }

    #[test]
    fn substitution_swaps_variables() {
        let f = PrimeField::default();
        let p = Polynomial::var(&f, 2, 0);
        let images = vec![Polynomial::var(&f, 2, 1), Polynomial::var(&f, 2, 0)];
        assert_eq!(p.substitute(&images, &f, 2), Polynomial::var(&f, 2, 1));
    }

    #[test]
    fn rendering_signs_over_q_and_fp() {
        let q = Rationals;
        let r = RingSpec::new(vec![2]).unwrap();
        let p =
            Polynomial::from_terms(&q, [(Monomial::var(2, 0), q.from_i64(2)), (Monomial::var(2, 1), q.from_i64(-3))]);
        assert_eq!(p.render(&r, &q, &TermOrder::lex()), "2*x[1,1]-3*x[1,2]");
        let f = PrimeField::default();
        let p = Polynomial::from_terms(&f, [(Monomial::var(2, 0), 1), (Monomial::var(2, 1), f.from_i64(-1))]);
        assert_eq!(p.render(&r, &f, &TermOrder::lex()), "x[1,1]+32002*x[1,2]");
    }
}
