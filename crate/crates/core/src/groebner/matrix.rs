use crate::field::Field;
use crate::poly::{Poly, PolyRing};

/// A sparse column: `(row, entry)` pairs sorted by row, entries nonzero.
pub type Column<E> = Vec<(usize, Poly<E>)>;

/// A column-sparse matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    nrows: usize,
    cols: Vec<Column<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn from_columns(nrows: usize, cols: Vec<Column<E>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.iter().all(|(r, p)| *r < nrows && !p.is_zero())));
        debug_assert!(cols.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0)));
        Matrix { nrows, cols }
    }

    /// Builds from dense rows; zero entries are dropped.
    pub fn from_rows(nrows: usize, ncols: usize, rows: Vec<Vec<Poly<E>>>) -> Self {
        let mut cols = vec![Vec::new(); ncols];
        for (r, row) in rows.into_iter().enumerate() {
            for (c, p) in row.into_iter().enumerate() {
                if !p.is_zero() {
                    cols[c].push((r, p));
                }
            }
        }
        Matrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn cols(&self) -> &[Column<E>] {
        &self.cols
    }

    pub fn col(&self, c: usize) -> &Column<E> {
        &self.cols[c]
    }

    pub fn into_cols(self) -> Vec<Column<E>> {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<&Poly<E>> {
        self.cols[c].binary_search_by_key(&r, |e| e.0).ok().map(|i| &self.cols[c][i].1)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn push_col(&mut self, col: Column<E>) {
        self.cols.push(col);
    }

    /// Keeps the listed columns, in order.
    pub fn select_cols(&self, keep: &[usize]) -> Self {
        Matrix { nrows: self.nrows, cols: keep.iter().map(|&c| self.cols[c].clone()).collect() }
    }

    /// Drops row `r`, renumbering rows below it.
    pub fn remove_row(&mut self, r: usize) {
        for col in &mut self.cols {
            col.retain(|(i, _)| *i != r);
            for e in col.iter_mut() {
                if e.0 > r {
                    e.0 -= 1;
                }
            }
        }
        self.nrows -= 1;
    }

    pub fn remove_col(&mut self, c: usize) {
        self.cols.remove(c);
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.nrows, other.nrows);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Matrix { nrows: self.nrows, cols }
    }
}

/// `a + coeff * b` on sparse columns.
pub fn column_axpy<F: Field>(ring: &PolyRing<F>, a: &Column<F::Elem>, coeff: &Poly<F::Elem>, b: &Column<F::Elem>) -> Column<F::Elem> {
    let mut out: Column<F::Elem> = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let p = ring.mul(coeff, &b[j].1);
            if !p.is_zero() {
                out.push((b[j].0, p));
            }
            j += 1;
        } else {
            let p = ring.add(&a[i].1, &ring.mul(coeff, &b[j].1));
            if !p.is_zero() {
                out.push((a[i].0, p));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Matrix product `a * b`.
pub fn compose<F: Field>(ring: &PolyRing<F>, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.ncols(), b.nrows(), "dimension mismatch in matrix product");
    let cols = b.cols().iter().map(|bc| bc.iter().fold(Vec::new(), |acc, (k, p)| column_axpy(ring, &acc, p, a.col(*k)))).collect();
    Matrix::from_columns(a.nrows(), cols)
}

pub fn format_matrix<F: Field>(ring: &PolyRing<F>, m: &Matrix<F::Elem>) -> String {
    let mut s = String::new();
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|c| m.entry(r, c).map_or("0".into(), |p| ring.format(p))).collect();
        s.push_str(&format!("[{}]\n", row.join(", ")));
    }
    s
}
