//! Brute-force degreewise linear algebra over Z/32003, independent of the library's
//! Gröbner and resolution code. Library types are only read for their terms.

#![allow(dead_code)]

use std::collections::HashMap;

use bigraded_lc::field::PrimeField;
use bigraded_lc::groebner::Matrix;
use bigraded_lc::poly::{PolyRing, P};

pub const PRIME: u64 = 32003;

pub type Exps = Vec<u16>;

/// Per-row term lists of one column.
pub type SparseColumn = Vec<(usize, Vec<(Exps, u64)>)>;

/// All exponent vectors of total degree `deg` in `nvars` variables.
pub fn exps_of_degree(nvars: usize, deg: i64) -> Vec<Exps> {
    if deg < 0 {
        return Vec::new();
    }
    if nvars == 0 {
        return if deg == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in exps_of_degree(nvars - 1, deg - first) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= PRIME;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    r
}

/// Rank over Z/p by row reduction. Rows are consumed.
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = pow_mod(rows[r][c], PRIME - 2);
        for v in rows[r].iter_mut() {
            *v = *v * inv % PRIME;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = (*x + PRIME - f * p % PRIME) % PRIME;
                }
            }
        }
        r += 1;
    }
    r
}

/// A graded free module `⊕ R(-d_k)` with its monomial basis in one degree.
pub struct DegreePiece {
    index: HashMap<(usize, Exps), usize>,
}

impl DegreePiece {
    pub fn new(nvars: usize, degrees: &[i64], deg: i64) -> Self {
        let mut index = HashMap::new();
        for (k, &d) in degrees.iter().enumerate() {
            for e in exps_of_degree(nvars, deg - d) {
                let next = index.len();
                index.insert((k, e), next);
            }
        }
        DegreePiece { index }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    /// Coordinates of `mono · column` where `column[k]` is a list of terms.
    pub fn coords(&self, mono: &[u16], column: &[(usize, Vec<(Exps, u64)>)]) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        for (k, terms) in column {
            for (e, c) in terms {
                let prod: Exps = e.iter().zip(mono).map(|(a, b)| a + b).collect();
                let slot = self.index[&(*k, prod)];
                v[slot] = (v[slot] + c) % PRIME;
            }
        }
        v
    }
}

pub fn terms(f: &P<PrimeField>) -> Vec<(Exps, u64)> {
    f.terms().iter().map(|(m, c)| (m.exponents().to_vec(), *c as u64)).collect()
}

/// A graded map of free modules written as a list of columns with their degrees.
pub struct GradedMap {
    pub nvars: usize,
    pub row_degrees: Vec<i64>,
    pub cols: Vec<(i64, SparseColumn)>,
}

impl GradedMap {
    pub fn from_matrix(ring: &PolyRing<PrimeField>, row_degrees: &[i64], mat: &Matrix<u32>, col_degrees: &[i64]) -> Self {
        let cols = mat.cols().iter().zip(col_degrees).map(|(col, &d)| (d, col.iter().map(|(r, f)| (*r, terms(f))).collect())).collect();
        GradedMap { nvars: ring.nvars(), row_degrees: row_degrees.to_vec(), cols }
    }

    /// Principal generators of an ideal as a one-row map.
    pub fn ideal(nvars: usize, gens: &[P<PrimeField>]) -> Self {
        let cols = gens.iter().filter(|g| !g.is_zero()).map(|g| (g.homogeneous_degree().expect("homogeneous") as i64, vec![(0, terms(g))])).collect();
        GradedMap { nvars, row_degrees: vec![0], cols }
    }

    fn image_rows(&self, piece: &DegreePiece, deg: i64) -> Vec<Vec<u64>> {
        let mut rows = Vec::new();
        for (d, col) in &self.cols {
            for mono in exps_of_degree(self.nvars, deg - d) {
                rows.push(piece.coords(&mono, col));
            }
        }
        rows
    }

    pub fn image_rank(&self, deg: i64) -> usize {
        let piece = DegreePiece::new(self.nvars, &self.row_degrees, deg);
        if piece.dim() == 0 {
            return 0;
        }
        rank(self.image_rows(&piece, deg))
    }

    /// Hilbert function of the cokernel in degree `deg`.
    pub fn coker_dim(&self, deg: i64) -> usize {
        DegreePiece::new(self.nvars, &self.row_degrees, deg).dim() - self.image_rank(deg)
    }

    /// Dimension of the kernel in degree `deg`.
    pub fn kernel_dim(&self, deg: i64) -> usize {
        let col_degrees: Vec<i64> = self.cols.iter().map(|c| c.0).collect();
        DegreePiece::new(self.nvars, &col_degrees, deg).dim() - self.image_rank(deg)
    }

    /// Whether the vector with the given per-row terms lies in the image in degree `deg`.
    pub fn contains(&self, deg: i64, target: &[(usize, Vec<(Exps, u64)>)]) -> bool {
        let piece = DegreePiece::new(self.nvars, &self.row_degrees, deg);
        let mut rows = self.image_rows(&piece, deg);
        let before = rank(rows.clone());
        rows.push(piece.coords(&vec![0; self.nvars], target));
        rank(rows) == before
    }
}

/// Membership of a homogeneous polynomial in a homogeneous ideal.
pub fn ideal_contains(nvars: usize, gens: &[P<PrimeField>], f: &P<PrimeField>) -> bool {
    match f.homogeneous_degree() {
        None => true,
        Some(d) => GradedMap::ideal(nvars, gens).contains(d as i64, &[(0, terms(f))]),
    }
}

/// Hilbert function of `R/I` in degree `deg`.
pub fn quotient_hf(nvars: usize, gens: &[P<PrimeField>], deg: i64) -> usize {
    GradedMap::ideal(nvars, gens).coker_dim(deg)
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub mod strategies {
    use super::*;
    use bigraded_lc::poly::Monomial;
    use proptest::prelude::*;

    /// A homogeneous polynomial of degree `deg` with up to `max_terms` terms; repeated picks may cancel.
    pub fn homogeneous(ring: PolyRing<PrimeField>, deg: i64, max_terms: usize) -> impl Strategy<Value = P<PrimeField>> {
        let monos = exps_of_degree(ring.nvars(), deg);
        let n = monos.len();
        prop::collection::vec((0..n, 1u32..PRIME as u32), 1..=max_terms).prop_map(move |picks| {
            let terms = picks.into_iter().map(|(k, c)| (Monomial::from_exponents(&monos[k]), c)).collect();
            ring.from_terms(terms)
        })
    }

    /// Between one and `max_gens` homogeneous generators of degrees 1..=max_deg.
    pub fn ideal_gens(ring: PolyRing<PrimeField>, max_gens: usize, max_deg: i64) -> impl Strategy<Value = Vec<P<PrimeField>>> {
        prop::collection::vec(1..=max_deg, 1..=max_gens)
            .prop_flat_map(move |degs| degs.into_iter().map(|d| homogeneous(ring.clone(), d, 3)).collect::<Vec<_>>())
    }
}
