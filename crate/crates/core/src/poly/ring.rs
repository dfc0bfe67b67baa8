use std::cmp::Ordering;
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder};
use crate::field::Field;

/// A sparse polynomial. Terms are sorted strictly descending in the order of the ring
/// that built it, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, E)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Maximum total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// The common total degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|t| t.0.degree() == d).then_some(d)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

/// A polynomial ring `K[v_1, ..., v_k]` with a fixed monomial order.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    order: MonomialOrder,
    names: Arc<Vec<String>>,
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.order == other.order && self.names == other.names
    }
}

pub type P<F> = Poly<<F as Field>::Elem>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing { field, order, names: Arc::new(names) }
    }

    /// `K[x1, ..., xm]` with grevlex.
    pub fn with_x_vars(field: F, m: usize) -> Self {
        Self::new(field, (1..=m).map(|i| format!("x{i}")).collect(), MonomialOrder::GrevLex)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn zero(&self) -> P<F> {
        Poly::zero()
    }

    pub fn one(&self) -> P<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> P<F> {
        self.term(self.one_monomial(), c)
    }

    pub fn from_int(&self, v: i64) -> P<F> {
        self.constant(self.field.from_i64(v))
    }

    pub fn var(&self, i: usize) -> P<F> {
        self.term(Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> P<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(&self, m: Monomial) -> P<F> {
        self.term(m, self.field.one())
    }

    /// Canonicalizes an arbitrary list of terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> P<F> {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if self.field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|l| self.field.is_zero(&l.1)) {
            out.pop();
        }
        Poly { terms: out }
    }

    /// Trusts that `terms` is already canonical for this ring.
    #[allow(clippy::wrong_self_convention)]
    pub(crate) fn from_sorted_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> P<F> {
        debug_assert!(terms.windows(2).all(|w| self.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Poly { terms }
    }

    /// `a + coeff * mono * b`, merged in one pass.
    pub fn add_scaled(&self, a: &P<F>, coeff: &F::Elem, mono: &Monomial, b: &P<F>) -> P<F> {
        let fld = &self.field;
        if fld.is_zero(coeff) {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut bi = b.terms.iter().map(|(m, c)| (m.mul(mono), fld.mul(c, coeff))).peekable();
        let mut ai = a.terms.iter().peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(ai.next().unwrap().clone()),
                (None, Some(_)) => out.push(bi.next().unwrap()),
                (Some(x), Some(y)) => match self.order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(ai.next().unwrap().clone()),
                    Ordering::Less => out.push(bi.next().unwrap()),
                    Ordering::Equal => {
                        let (m, c1) = ai.next().unwrap();
                        let (_, c2) = bi.next().unwrap();
                        let c = fld.add(c1, &c2);
                        if !fld.is_zero(&c) {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, a: &P<F>, b: &P<F>) -> P<F> {
        self.add_scaled(a, &self.field.one(), &self.one_monomial(), b)
    }

    pub fn sub(&self, a: &P<F>, b: &P<F>) -> P<F> {
        self.add_scaled(a, &self.field.neg(&self.field.one()), &self.one_monomial(), b)
    }

    pub fn neg(&self, a: &P<F>) -> P<F> {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect() }
    }

    pub fn scale(&self, a: &P<F>, c: &F::Elem) -> P<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c))).collect() }
    }

    pub fn mul_term(&self, a: &P<F>, mono: &Monomial, c: &F::Elem) -> P<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(m, x)| (m.mul(mono), self.field.mul(x, c))).collect() }
    }

    pub fn mul(&self, a: &P<F>, b: &P<F>) -> P<F> {
        let (small, big) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = self.add_scaled(&acc, c, m, big);
        }
        acc
    }

    pub fn pow(&self, a: &P<F>, k: u32) -> P<F> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn make_monic(&self, a: &P<F>) -> P<F> {
        match a.lead() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero lead coefficient");
                self.scale(a, &inv)
            }
        }
    }

    /// Exact division `a / d`; `None` if `d` does not divide `a` (or `d` is zero).
    pub fn exact_div(&self, a: &P<F>, d: &P<F>) -> Option<P<F>> {
        let (dm, dc) = d.lead()?;
        let dinv = self.field.inv(dc)?;
        let mut rem = a.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.lead().cloned() {
            let q = m.div(dm)?;
            let qc = self.field.mul(&c, &dinv);
            rem = self.add_scaled(&rem, &self.field.neg(&qc), &q, d);
            quot.push((q, qc));
        }
        Some(self.from_terms(quot))
    }

    /// Substitutes `value` for variable `var`.
    pub fn specialize(&self, f: &P<F>, var: usize, value: &F::Elem) -> P<F> {
        let terms = f
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exponents()[var];
                let mut cc = c.clone();
                for _ in 0..e {
                    cc = self.field.mul(&cc, value);
                }
                (m.without(var), cc)
            })
            .collect();
        self.from_terms(terms)
    }

    /// Moves a polynomial into another ring by transforming each monomial.
    pub fn map_into(&self, target: &PolyRing<F>, f: &P<F>, map: impl Fn(&Monomial) -> Monomial) -> P<F> {
        target.from_terms(f.terms.iter().map(|(m, c)| (map(m), c.clone())).collect())
    }

    pub fn format(&self, f: &P<F>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in f.terms.iter().enumerate() {
            let neg = self.field.is_negative(c);
            let abs = if neg { self.field.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                s.push_str(&self.field.format(&abs));
            } else if self.field.is_one(&abs) {
                s.push_str(&mono);
            } else {
                s.push_str(&self.field.format(&abs));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], e) })
            .collect();
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring() -> PolyRing<PrimeField> {
        PolyRing::with_x_vars(PrimeField::default(), 2)
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring();
        let (x1, x2) = (r.var(0), r.var(1));
        let s = r.add(&x1, &x2);
        let sq = r.mul(&s, &s);
        assert_eq!(r.format(&sq), "x1^2 + 2*x1*x2 + x2^2");
        assert!(r.sub(&sq, &sq).is_zero());
        let q = r.exact_div(&sq, &s).unwrap();
        assert_eq!(q, s);
        assert!(r.exact_div(&sq, &x1).is_none());
    }

    #[test]
    fn specialize_examples() {
        let r = ring();
        let f = r.add(&r.mul(&r.var(0), &r.var(0)), &r.mul(&r.var(0), &r.var(1)));
        let g = r.specialize(&f, 0, &1);
        assert_eq!(r.format(&g), "x2 + 1");
        let h = r.specialize(&r.var(1), 0, &0);
        assert_eq!(h, r.var(1));
    }
}
