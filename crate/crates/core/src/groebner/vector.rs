use std::cmp::Ordering;

use crate::field::Field;
use crate::groebner::matrix::Column;
use crate::poly::{Monomial, Poly, PolyRing};

/// How terms in different components are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrderKind {
    /// Position over term: a lower component index always wins.
    Pot,
    /// Term over position: weighted degree, then the monomial, then the lower index.
    Top,
}

/// An element of a free module, stored as `(component, monomial, coefficient)` triples
/// sorted descending in the order of the owning [`FreeModule`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<E> {
    pub(crate) terms: Vec<(usize, Monomial, E)>,
}

impl<E> Vector<E> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(usize, Monomial, E)] {
        &self.terms
    }

    pub fn lead(&self) -> Option<&(usize, Monomial, E)> {
        self.terms.first()
    }
}

/// A graded free module `⊕ R(-d_i)` over a polynomial ring, with a module order.
#[derive(Clone, Debug)]
pub struct FreeModule<F: Field> {
    ring: PolyRing<F>,
    degrees: Vec<i64>,
    kind: ModuleOrderKind,
}

pub type V<F> = Vector<<F as Field>::Elem>;

impl<F: Field> FreeModule<F> {
    pub fn new(ring: PolyRing<F>, degrees: Vec<i64>, kind: ModuleOrderKind) -> Self {
        FreeModule { ring, degrees, kind }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn kind(&self) -> ModuleOrderKind {
        self.kind
    }

    pub fn term_degree(&self, comp: usize, mono: &Monomial) -> i64 {
        mono.degree() as i64 + self.degrees[comp]
    }

    /// Weighted degree of the lead term.
    pub fn degree_of(&self, v: &V<F>) -> Option<i64> {
        v.lead().map(|(c, m, _)| self.term_degree(*c, m))
    }

    pub fn cmp_pos(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        let ord = self.ring.order();
        match self.kind {
            ModuleOrderKind::Pot => b.0.cmp(&a.0).then_with(|| ord.cmp(a.1, b.1)),
            ModuleOrderKind::Top => {
                self.term_degree(a.0, a.1).cmp(&self.term_degree(b.0, b.1)).then_with(|| ord.cmp(a.1, b.1)).then_with(|| b.0.cmp(&a.0))
            }
        }
    }

    pub fn from_terms(&self, mut terms: Vec<(usize, Monomial, F::Elem)>) -> V<F> {
        let fld = self.ring.field();
        terms.sort_by(|a, b| self.cmp_pos((b.0, &b.1), (a.0, &a.1)));
        let mut out: Vec<(usize, Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (c, m, x) in terms {
            match out.last_mut() {
                Some(last) if last.0 == c && last.1 == m => last.2 = fld.add(&last.2, &x),
                _ => {
                    if out.last().is_some_and(|l| fld.is_zero(&l.2)) {
                        out.pop();
                    }
                    out.push((c, m, x));
                }
            }
        }
        if out.last().is_some_and(|l| fld.is_zero(&l.2)) {
            out.pop();
        }
        Vector { terms: out }
    }

    pub fn from_column(&self, col: &Column<F::Elem>) -> V<F> {
        self.from_terms(col.iter().flat_map(|(r, p)| p.terms().iter().map(move |(m, c)| (*r, m.clone(), c.clone()))).collect())
    }

    /// Like [`from_column`](Self::from_column) but places the entries at `offset + row`.
    pub fn from_column_shifted(&self, col: &Column<F::Elem>, offset: usize) -> Vec<(usize, Monomial, F::Elem)> {
        col.iter().flat_map(|(r, p)| p.terms().iter().map(move |(m, c)| (*r + offset, m.clone(), c.clone()))).collect()
    }

    pub fn basis_vector(&self, i: usize) -> V<F> {
        Vector { terms: vec![(i, self.ring.one_monomial(), self.ring.field().one())] }
    }

    /// Groups a vector back into per-row polynomials, keeping components in `range` and
    /// renumbering them from zero.
    pub fn to_column_range(&self, v: &V<F>, range: std::ops::Range<usize>) -> Column<F::Elem> {
        let mut rows: std::collections::BTreeMap<usize, Vec<(Monomial, F::Elem)>> = Default::default();
        for (c, m, x) in &v.terms {
            if range.contains(c) {
                rows.entry(c - range.start).or_default().push((m.clone(), x.clone()));
            }
        }
        rows.into_iter().map(|(r, t)| (r, self.ring.from_terms(t))).filter(|(_, p)| !p.is_zero()).collect()
    }

    pub fn to_column(&self, v: &V<F>) -> Column<F::Elem> {
        self.to_column_range(v, 0..self.rank())
    }

    /// `a + coeff * mono * b`.
    pub fn add_scaled(&self, a: &[(usize, Monomial, F::Elem)], coeff: &F::Elem, mono: &Monomial, b: &V<F>) -> Vec<(usize, Monomial, F::Elem)> {
        let fld = self.ring.field();
        let mut out = Vec::with_capacity(a.len() + b.terms.len());
        let mut bi = b.terms.iter().map(|(c, m, x)| (*c, m.mul(mono), fld.mul(x, coeff))).peekable();
        let mut ai = a.iter().peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(ai.next().unwrap().clone()),
                (None, Some(_)) => out.push(bi.next().unwrap()),
                (Some(x), Some(y)) => match self.cmp_pos((x.0, &x.1), (y.0, &y.1)) {
                    Ordering::Greater => out.push(ai.next().unwrap().clone()),
                    Ordering::Less => out.push(bi.next().unwrap()),
                    Ordering::Equal => {
                        let (c, m, x1) = ai.next().unwrap();
                        let (_, _, x2) = bi.next().unwrap();
                        let s = fld.add(x1, &x2);
                        if !fld.is_zero(&s) {
                            out.push((*c, m.clone(), s));
                        }
                    }
                },
            }
        }
        out
    }

    pub fn add(&self, a: &V<F>, b: &V<F>) -> V<F> {
        Vector { terms: self.add_scaled(&a.terms, &self.ring.field().one(), &self.ring.one_monomial(), b) }
    }

    pub fn sub(&self, a: &V<F>, b: &V<F>) -> V<F> {
        let m1 = self.ring.field().neg(&self.ring.field().one());
        Vector { terms: self.add_scaled(&a.terms, &m1, &self.ring.one_monomial(), b) }
    }

    pub fn mul_term(&self, v: &V<F>, mono: &Monomial, coeff: &F::Elem) -> V<F> {
        let fld = self.ring.field();
        if fld.is_zero(coeff) {
            return Vector::zero();
        }
        Vector { terms: v.terms.iter().map(|(c, m, x)| (*c, m.mul(mono), fld.mul(x, coeff))).collect() }
    }

    pub fn mul_poly(&self, v: &V<F>, p: &Poly<F::Elem>) -> V<F> {
        let mut acc: Vec<(usize, Monomial, F::Elem)> = Vec::new();
        for (m, c) in p.terms() {
            acc = self.add_scaled(&acc, c, m, v);
        }
        Vector { terms: acc }
    }

    pub fn make_monic(&self, v: V<F>) -> V<F> {
        let fld = self.ring.field();
        match v.lead() {
            None => v,
            Some((_, _, c)) if fld.is_one(c) => v,
            Some((_, _, c)) => {
                let inv = fld.inv(c).expect("nonzero");
                Vector { terms: v.terms.into_iter().map(|(c, m, x)| (c, m, fld.mul(&x, &inv))).collect() }
            }
        }
    }

    pub fn format(&self, v: &V<F>) -> String {
        let col = self.to_column(v);
        if col.is_empty() {
            return "0".into();
        }
        col.iter().map(|(r, p)| format!("[{r}]: {}", self.ring.format(p))).collect::<Vec<_>>().join(", ")
    }
}
