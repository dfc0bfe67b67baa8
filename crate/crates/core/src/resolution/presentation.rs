use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{cokernel_hilbert_series, column_axpy, format_matrix, syzygies, HilbertSeries, Matrix};
use crate::poly::{PolyRing, P};

/// `Z^m` degrees of generators and relations, carried alongside the `Z`-grading when every
/// entry is a scalar multiple of a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegrees {
    pub rows: Vec<Vec<i64>>,
    pub cols: Vec<Vec<i64>>,
}

/// `coker(⊕ R(-col_degrees) → ⊕ R(-row_degrees))`.
#[derive(Clone, Debug)]
pub struct GradedPresentation<F: Field> {
    ring: PolyRing<F>,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    matrix: Matrix<F::Elem>,
    multidegrees: Option<Multidegrees>,
}

impl<F: Field> GradedPresentation<F> {
    /// Checks that entry `(r, c)` is zero or homogeneous of degree `col_degrees[c] - row_degrees[r]`.
    pub fn new(ring: &PolyRing<F>, row_degrees: Vec<i64>, matrix: Matrix<F::Elem>, col_degrees: Vec<i64>) -> Result<Self> {
        if matrix.nrows() != row_degrees.len() || matrix.ncols() != col_degrees.len() {
            return Err(Error::InvalidArgument(format!(
                "{}x{} matrix with {} row and {} column degrees",
                matrix.nrows(),
                matrix.ncols(),
                row_degrees.len(),
                col_degrees.len()
            )));
        }
        for (c, col) in matrix.cols().iter().enumerate() {
            for (r, p) in col {
                let want = col_degrees[c] - row_degrees[*r];
                if p.homogeneous_degree().map(i64::from) != Some(want) {
                    return Err(Error::NotHomogeneous { row: *r, col: c });
                }
            }
        }
        Ok(GradedPresentation { ring: ring.clone(), row_degrees, col_degrees, matrix, multidegrees: None })
    }

    pub(crate) fn new_unchecked(ring: &PolyRing<F>, row_degrees: Vec<i64>, matrix: Matrix<F::Elem>, col_degrees: Vec<i64>) -> Self {
        debug_assert!(Self::new(ring, row_degrees.clone(), matrix.clone(), col_degrees.clone()).is_ok());
        GradedPresentation { ring: ring.clone(), row_degrees, col_degrees, matrix, multidegrees: None }
    }

    /// Presentation of `⊕ R(-d)` over the given degrees.
    pub fn free(ring: &PolyRing<F>, degrees: Vec<i64>) -> Self {
        let n = degrees.len();
        GradedPresentation { ring: ring.clone(), row_degrees: degrees, col_degrees: Vec::new(), matrix: Matrix::zero(n, 0), multidegrees: None }
    }

    pub fn zero(ring: &PolyRing<F>) -> Self {
        Self::free(ring, Vec::new())
    }

    /// `R / (gens)` with generators homogeneous.
    pub fn cyclic(ring: &PolyRing<F>, gens: &[P<F>]) -> Result<Self> {
        let gens: Vec<P<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let degs = gens
            .iter()
            .enumerate()
            .map(|(i, g)| g.homogeneous_degree().map(i64::from).ok_or(Error::NotHomogeneous { row: 0, col: i }))
            .collect::<Result<Vec<_>>>()?;
        let ncols = gens.len();
        Self::new(ring, vec![0], Matrix::from_rows(1, ncols, vec![gens]), degs)
    }

    /// Attaches `Z^m` degrees and checks every entry against them.
    pub fn with_multidegrees(mut self, rows: Vec<Vec<i64>>, cols: Vec<Vec<i64>>) -> Result<Self> {
        let m = self.ring.nvars();
        if rows.len() != self.row_degrees.len() || cols.len() != self.col_degrees.len() || rows.iter().chain(&cols).any(|d| d.len() != m) {
            return Err(Error::NotMultigraded("degree vectors do not match the matrix shape".into()));
        }
        for (c, col) in self.matrix.cols().iter().enumerate() {
            for (r, p) in col {
                if !p.is_monomial() {
                    return Err(Error::NotMultigraded(format!("entry ({r},{c}) is not a monomial")));
                }
                let e = p.lead_monomial().unwrap().exponents();
                if (0..m).any(|k| rows[*r][k] + e[k] as i64 != cols[c][k]) {
                    return Err(Error::NotMultigraded(format!("entry ({r},{c}) has the wrong multidegree")));
                }
            }
        }
        self.multidegrees = Some(Multidegrees { rows, cols });
        Ok(self)
    }

    /// `R / (monomials)` with its fine grading.
    pub fn monomial_cyclic(ring: &PolyRing<F>, gens: &[P<F>]) -> Result<Self> {
        let p = Self::cyclic(ring, gens)?;
        let cols = p
            .matrix
            .cols()
            .iter()
            .map(|c| {
                c.first()
                    .map(|(_, q)| q)
                    .ok_or_else(|| Error::NotMultigraded("zero column".into()))
                    .map(|q| q.lead_monomial().unwrap().exponents().iter().map(|&x| x as i64).collect())
            })
            .collect::<Result<Vec<Vec<i64>>>>()?;
        p.with_multidegrees(vec![vec![0; ring.nvars()]], cols)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn matrix(&self) -> &Matrix<F::Elem> {
        &self.matrix
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn multidegrees(&self) -> Option<&Multidegrees> {
        self.multidegrees.as_ref()
    }

    pub fn num_generators(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        cokernel_hilbert_series(&self.ring, &self.row_degrees, &self.matrix)
    }

    /// Krull dimension of the cokernel, `-1` for the zero module.
    pub fn krull_dimension(&self) -> i64 {
        self.hilbert_series().dimension()
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert_series().is_zero()
    }

    pub fn hilbert_function(&self, deg: i64) -> i64 {
        self.hilbert_series().hilbert_function(deg)
    }

    /// Same module with every generator and relation degree raised by `by`.
    pub fn shifted(&self, by: i64) -> Self {
        let mut p = self.clone();
        p.row_degrees.iter_mut().for_each(|d| *d += by);
        p.col_degrees.iter_mut().for_each(|d| *d += by);
        p
    }

    /// Direct sum of `k` copies.
    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(Self::zero(&self.ring), |acc, _| acc.direct_sum(self))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let nr = self.row_degrees.len();
        let mut cols: Vec<_> = self.matrix.cols().to_vec();
        cols.extend(other.matrix.cols().iter().map(|c| c.iter().map(|(r, p)| (r + nr, p.clone())).collect()));
        let multidegrees = match (&self.multidegrees, &other.multidegrees) {
            (Some(a), Some(b)) => {
                Some(Multidegrees { rows: a.rows.iter().chain(&b.rows).cloned().collect(), cols: a.cols.iter().chain(&b.cols).cloned().collect() })
            }
            _ => None,
        };
        GradedPresentation {
            ring: self.ring.clone(),
            row_degrees: self.row_degrees.iter().chain(&other.row_degrees).copied().collect(),
            col_degrees: self.col_degrees.iter().chain(&other.col_degrees).copied().collect(),
            matrix: Matrix::from_columns(nr + other.row_degrees.len(), cols),
            multidegrees,
        }
    }

    /// Removes superfluous generators by cancelling unit entries, and drops zero relations.
    pub fn pruned(&self) -> Self {
        let mut p = self.clone();
        let mut md = p.multidegrees.take();
        let (rows_md, cols_md) = match md.as_mut() {
            Some(m) => (Some(&mut m.rows), Some(&mut m.cols)),
            None => (None, None),
        };
        prune_units(&p.ring, None, &mut p.matrix, &mut p.row_degrees, &mut p.col_degrees, rows_md, cols_md);
        let keep: Vec<usize> = (0..p.matrix.ncols()).filter(|&c| !p.matrix.col(c).is_empty()).collect();
        p.matrix = p.matrix.select_cols(&keep);
        p.col_degrees = keep.iter().map(|&c| p.col_degrees[c]).collect();
        if let Some(m) = md.as_mut() {
            m.cols = keep.iter().map(|&c| m.cols[c].clone()).collect();
        }
        p.multidegrees = md;
        p
    }

    /// `{ v : f v = 0 }` as a graded submodule, presented on its own generators.
    pub fn kernel_of_mult(&self, f: &P<F>) -> Result<Self> {
        let e = f.homogeneous_degree().ok_or(Error::NotHomogeneous { row: 0, col: 0 })? as i64;
        let nr = self.row_degrees.len();
        if nr == 0 {
            return Ok(Self::zero(&self.ring));
        }
        // colon generators: a-parts of syz([f I | P])
        let mut cols: Vec<_> = (0..nr).map(|r| vec![(r, f.clone())]).collect();
        cols.extend(self.matrix.cols().iter().cloned());
        let big = Matrix::from_columns(nr, cols);
        let degs: Vec<i64> = self.row_degrees.iter().map(|d| d + e).chain(self.col_degrees.iter().copied()).collect();
        let (syz, sdeg) = syzygies(&self.ring, &self.row_degrees, &big, &degs);
        let mut gens = Vec::new();
        let mut gdeg = Vec::new();
        for (c, col) in syz.cols().iter().enumerate() {
            let a: Vec<_> = col.iter().filter(|(r, _)| *r < nr).cloned().collect();
            if !a.is_empty() {
                gens.push(a);
                gdeg.push(sdeg[c] - e);
            }
        }
        let gens = Matrix::from_columns(nr, gens);
        Ok(subquotient(&self.ring, &self.row_degrees, &gens, &gdeg, &self.matrix, &self.col_degrees))
    }

    pub fn format(&self) -> String {
        format_matrix(&self.ring, &self.matrix)
    }
}

/// Presentation of `(im gens + im rels) / im rels`, with generators the columns of `gens`.
pub fn subquotient<F: Field>(
    ring: &PolyRing<F>,
    ambient_degrees: &[i64],
    gens: &Matrix<F::Elem>,
    gen_degrees: &[i64],
    rels: &Matrix<F::Elem>,
    rel_degrees: &[i64],
) -> GradedPresentation<F> {
    let k = gens.ncols();
    if k == 0 {
        return GradedPresentation::zero(ring);
    }
    let both = gens.hcat(rels);
    let degs: Vec<i64> = gen_degrees.iter().chain(rel_degrees).copied().collect();
    let (syz, sdeg) = syzygies(ring, ambient_degrees, &both, &degs);
    let mut cols = Vec::new();
    let mut cdeg = Vec::new();
    for (c, col) in syz.cols().iter().enumerate() {
        let lam: Vec<_> = col.iter().filter(|(r, _)| *r < k).cloned().collect();
        if !lam.is_empty() {
            cols.push(lam);
            cdeg.push(sdeg[c]);
        }
    }
    GradedPresentation::new_unchecked(ring, gen_degrees.to_vec(), Matrix::from_columns(k, cols), cdeg).pruned()
}

/// Cancels unit entries of `cur` one at a time. For a unit at `(r, c)` the column `c` is
/// used to clear row `r`, then row `r` and column `c` are dropped, and column `r` of the
/// preceding map `prev` (whose source is the target of `cur`) is dropped as well.
/// Returns the indices of the surviving rows of `cur`.
pub(crate) fn prune_units<F: Field>(
    ring: &PolyRing<F>,
    mut prev: Option<&mut Matrix<F::Elem>>,
    cur: &mut Matrix<F::Elem>,
    row_degrees: &mut Vec<i64>,
    col_degrees: &mut Vec<i64>,
    mut row_md: Option<&mut Vec<Vec<i64>>>,
    mut col_md: Option<&mut Vec<Vec<i64>>>,
) -> Vec<usize> {
    let fld = ring.field();
    let mut alive: Vec<usize> = (0..cur.nrows()).collect();
    loop {
        let unit = cur
            .cols()
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.iter().find(|(_, p)| p.homogeneous_degree() == Some(0)).map(|(r, p)| (*r, c, p.clone())));
        let Some((r, c, u)) = unit else { break };
        let uinv = fld.inv(&u.lead().unwrap().1).unwrap();
        let pivot = cur.col(c).clone();
        let mut cols: Vec<_> = cur.cols().to_vec();
        for (k, col) in cols.iter_mut().enumerate() {
            if k == c {
                continue;
            }
            if let Some(v) = col.iter().find(|(i, _)| *i == r).map(|(_, p)| p.clone()) {
                let factor = ring.neg(&ring.scale(&v, &uinv));
                *col = column_axpy(ring, col, &factor, &pivot);
            }
        }
        cols.remove(c);
        *cur = Matrix::from_columns(cur.nrows(), cols);
        cur.remove_row(r);
        row_degrees.remove(r);
        col_degrees.remove(c);
        alive.remove(r);
        if let Some(m) = row_md.as_deref_mut() {
            m.remove(r);
        }
        if let Some(m) = col_md.as_deref_mut() {
            m.remove(c);
        }
        if let Some(p) = prev.as_deref_mut() {
            p.remove_col(r);
        }
    }
    alive
}
