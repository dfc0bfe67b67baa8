//! Kernels of graded maps between free modules.
//!
//! The kernel of `A : ⊕ R(-c_j) → ⊕ R(-r_i)` is read off a Gröbner basis of the
//! graph `{(A e_j, e_j)}` in `F0 ⊕ F1` under a position-over-term order that ranks the
//! `F0` components first: basis elements whose lead lies in `F1` have no `F0` part and
//! generate the kernel.

use super::buchberger::GroebnerBasis;
use super::matrix::{Column, Matrix};
use super::vector::{FreeModule, ModuleOrderKind, Vector};
use crate::field::Field;
use crate::poly::{Monomial, PolyRing};

/// Generators of `ker(mat)` as columns over the source basis, with their degrees.
///
/// `row_degrees` and `col_degrees` must make every column homogeneous:
/// entry `(r, c)` has degree `col_degrees[c] - row_degrees[r]`.
pub fn syzygies<F: Field>(ring: &PolyRing<F>, row_degrees: &[i64], mat: &Matrix<F::Elem>, col_degrees: &[i64]) -> (Matrix<F::Elem>, Vec<i64>) {
    assert_eq!(mat.nrows(), row_degrees.len());
    assert_eq!(mat.ncols(), col_degrees.len());
    let nr = mat.nrows();
    let nc = mat.ncols();
    let degrees: Vec<i64> = row_degrees.iter().chain(col_degrees).copied().collect();
    let module = FreeModule::new(ring.clone(), degrees, ModuleOrderKind::Pot);
    let gens = mat
        .cols()
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let mut t = module.from_column_shifted(col, 0);
            t.push((nr + j, Monomial::one(ring.nvars()), ring.field().one()));
            module.from_terms(t)
        })
        .collect();
    let gb = GroebnerBasis::compute(&module, gens);
    let mut cols: Vec<Column<F::Elem>> = Vec::new();
    let mut degs = Vec::new();
    for g in gb.elements() {
        let (c, _, _) = g.lead().unwrap();
        if *c >= nr {
            degs.push(module.degree_of(g).unwrap());
            cols.push(module.to_column_range(g, nr..nr + nc));
        }
    }
    (Matrix::from_columns(nc, cols), degs)
}

/// A Gröbner basis of the image of a matrix that also remembers, for every basis
/// element, how it is written in terms of the original columns.
pub struct LiftingBasis<F: Field> {
    gb: GroebnerBasis<F>,
    nrows: usize,
    ncols: usize,
}

impl<F: Field> LiftingBasis<F> {
    pub fn new(ring: &PolyRing<F>, row_degrees: &[i64], mat: &Matrix<F::Elem>, col_degrees: &[i64]) -> Self {
        let nr = mat.nrows();
        let degrees: Vec<i64> = row_degrees.iter().chain(col_degrees).copied().collect();
        let module = FreeModule::new(ring.clone(), degrees, ModuleOrderKind::Pot);
        let gens = mat
            .cols()
            .iter()
            .enumerate()
            .map(|(j, col)| {
                let mut t = module.from_column_shifted(col, 0);
                t.push((nr + j, Monomial::one(ring.nvars()), ring.field().one()));
                module.from_terms(t)
            })
            .collect();
        LiftingBasis { gb: GroebnerBasis::compute(&module, gens), nrows: nr, ncols: mat.ncols() }
    }

    /// Writes `target` (a column over the rows) as a combination of the original columns,
    /// or returns `None` if it is not in the image.
    pub fn lift(&self, target: &Column<F::Elem>) -> Option<Column<F::Elem>> {
        let module = self.gb.module();
        let v = module.from_terms(module.from_column_shifted(target, 0));
        let r = self.gb.normal_form(&v);
        if r.lead().is_some_and(|(c, _, _)| *c < self.nrows) {
            return None;
        }
        let neg = module.mul_term(&r, &Monomial::one(module.ring().nvars()), &module.ring().field().neg(&module.ring().field().one()));
        Some(module.to_column_range(&neg, self.nrows..self.nrows + self.ncols))
    }

    pub fn contains(&self, target: &Column<F::Elem>) -> bool {
        let module = self.gb.module();
        let v: Vector<F::Elem> = module.from_terms(module.from_column_shifted(target, 0));
        let r = self.gb.normal_form(&v);
        !r.lead().is_some_and(|(c, _, _)| *c < self.nrows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::groebner::matrix::compose;
    use crate::poly::parse_poly;

    fn ring() -> PolyRing<PrimeField> {
        PolyRing::with_x_vars(PrimeField::default(), 2)
    }

    fn mat(r: &PolyRing<PrimeField>, rows: &[&[&str]]) -> Matrix<u32> {
        let nr = rows.len();
        let nc = rows[0].len();
        Matrix::from_rows(nr, nc, rows.iter().map(|row| row.iter().map(|t| parse_poly(t, r).unwrap()).collect()).collect())
    }

    #[test]
    fn koszul_relation() {
        let r = ring();
        let a = mat(&r, &[&["x1", "x2"]]);
        let (s, d) = syzygies(&r, &[0], &a, &[1, 1]);
        assert_eq!(d, vec![2]);
        assert_eq!(s.ncols(), 1);
        let expect = mat(&r, &[&["x2"], &["-x1"]]);
        let neg = mat(&r, &[&["-x2"], &["x1"]]);
        assert!(s == expect || s == neg);
    }

    #[test]
    fn monomial_taylor_relation() {
        let r = ring();
        let a = mat(&r, &[&["x1^2", "x1*x2"]]);
        let (s, d) = syzygies(&r, &[0], &a, &[2, 2]);
        assert_eq!(d, vec![3]);
        assert!(compose(&r, &a, &s).is_zero());
        assert_eq!(s.entry(0, 0).map(|p| r.format(p)).as_deref().map(|t| t.trim_start_matches('-')), Some("x2"));
    }

    #[test]
    fn two_by_three() {
        let r = ring();
        let a = mat(&r, &[&["x1", "x2", "0"], &["0", "x1", "x2"]]);
        let (s, d) = syzygies(&r, &[0, 0], &a, &[1, 1, 1]);
        assert_eq!(d, vec![3]);
        assert!(compose(&r, &a, &s).is_zero());
        let c = s.col(0);
        let lead = r.field().inv(&c[0].1.lead().unwrap().1).unwrap();
        let norm: Vec<String> = c.iter().map(|(_, p)| r.format(&r.scale(p, &lead))).collect();
        assert_eq!(norm, vec!["x2^2", "-x1*x2", "x1^2"]);
    }

    #[test]
    fn lifting() {
        let r = ring();
        let a = mat(&r, &[&["x1", "x2"]]);
        let lb = LiftingBasis::new(&r, &[0], &a, &[1, 1]);
        let t = vec![(0usize, parse_poly("x1^2 + x2^2", &r).unwrap())];
        let l = lb.lift(&t).unwrap();
        let back = compose(&r, &a, &Matrix::from_columns(2, vec![l]));
        assert_eq!(back.col(0), &t);
        assert!(lb.lift(&vec![(0usize, r.one())]).is_none());
    }
}
