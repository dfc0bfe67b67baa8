//! Dimensions of `H^s_Q(S/I)_{(i,j)}` from Koszul cohomology on `y_1^t, …, y_n^t`.
//!
//! `H^s_Q(M)` is the direct limit over `t` of `H^s(y^t; M)`, and in a fixed bidegree the
//! limit is reached at a finite stage. Everything here is finite-dimensional linear algebra
//! on bigraded pieces `(S/I)_{(i,e)}`, which are obtained by echelonizing the span of all
//! monomial multiples of the generators.
//!
//! The Koszul dimensions need not be monotone in `t` and can sit on a false plateau. They agree
//! with the limit once `t >= -n-j+B+1`, where `B` bounds the y-shifts of a minimal resolution
//! at homological positions up to `n-s+1`. `B` is taken from the Taylor complex of the initial
//! ideal, whose bigraded Betti numbers dominate those of `S/I`; the search starts there.

use std::collections::HashMap;
use std::sync::Arc;

use super::ideal::BigradedIdeal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::linear::{SparseEchelon, SparseVec};
use crate::groebner::GroebnerBasis;
use crate::poly::{monomials_of_degree, Monomial};

/// `(S/I)_{(i,e)}` with a basis of standard monomials.
struct Piece<F: Field> {
    index: HashMap<Monomial, usize>,
    echelon: SparseEchelon<F, usize>,
    /// monomial index -> position among standard monomials
    standard: HashMap<usize, usize>,
    standard_monos: Vec<Monomial>,
}

impl<F: Field> Piece<F> {
    fn dim(&self) -> usize {
        self.standard_monos.len()
    }

    /// Coordinates of the class of `mono` in the standard basis.
    fn reduce_monomial(&self, mono: &Monomial, one: &F::Elem) -> SparseVec<usize, F::Elem> {
        let Some(&k) = self.index.get(mono) else { return Vec::new() };
        self.echelon.reduce(&[(k, one.clone())]).into_iter().map(|(k, c)| (self.standard[&k], c)).collect()
    }
}

/// One row of an oracle table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleEntry {
    pub i: i64,
    pub j: i64,
    pub dim: usize,
    /// Last `t` used to certify stabilization.
    pub t: usize,
}

/// Koszul cohomology of `S/I`, with bigraded pieces cached across queries.
pub struct KoszulOracle<'a, F: Field> {
    ideal: &'a BigradedIdeal<F>,
    pieces: HashMap<(i64, i64), Arc<Piece<F>>>,
    /// y-degrees of the minimal generators of the initial ideal, largest first.
    lead_y_degrees: Vec<i64>,
    /// y-degree of the lcm of all of them.
    lcm_y_degree: i64,
}

impl<'a, F: Field> KoszulOracle<'a, F> {
    pub fn new(ideal: &'a BigradedIdeal<F>) -> Self {
        let m = ideal.spec().m();
        let leads: Vec<Monomial> =
            if ideal.is_empty() { Vec::new() } else { GroebnerBasis::ideal(ideal.spec().s(), ideal.gens()).lead_monomials().concat() };
        let mut lead_y_degrees: Vec<i64> = leads.iter().map(|u| u.partial_degree(m..u.nvars()) as i64).collect();
        lead_y_degrees.sort_unstable_by(|a, b| b.cmp(a));
        let lcm_y_degree = leads
            .iter()
            .fold(None, |acc: Option<Monomial>, u| Some(acc.map_or(u.clone(), |a| a.lcm(u))))
            .map_or(0, |l| l.partial_degree(m..l.nvars()) as i64);
        KoszulOracle { ideal, pieces: HashMap::new(), lead_y_degrees, lcm_y_degree }
    }

    /// Upper bound for the y-shifts at homological positions `<= k` of a minimal resolution of `S/I`.
    pub fn y_shift_bound(&self, k: usize) -> i64 {
        let top_k: i64 = self.lead_y_degrees.iter().take(k).sum();
        top_k.min(self.lcm_y_degree)
    }

    /// First `t` at which `H^s(y^t; S/I)_{(·,j)}` is known to equal the limit.
    pub fn certified_t(&self, s: usize, j: i64) -> usize {
        let n = self.ideal.spec().n();
        let b = self.y_shift_bound(n - s.min(n) + 1);
        let t = -(n as i64) - j + b + 1;
        start_t(s, j).max(t.max(1) as usize)
    }

    fn piece(&mut self, i: i64, e: i64) -> Arc<Piece<F>> {
        if let Some(p) = self.pieces.get(&(i, e)) {
            return p.clone();
        }
        let p = Arc::new(self.build_piece(i, e));
        self.pieces.insert((i, e), p.clone());
        p
    }

    fn build_piece(&self, i: i64, e: i64) -> Piece<F> {
        let spec = self.ideal.spec();
        let ring = spec.s();
        let fld = ring.field().clone();
        let monos = bidegree_monomials(spec.m(), spec.n(), i, e);
        // descending in the ring order, so a row's pivot is its lead monomial
        let mut monos = monos;
        monos.sort_by(|a, b| ring.cmp_monomials(b, a));
        let index: HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let mut echelon = SparseEchelon::new(fld.clone());
        for (g, b) in self.ideal.gens().iter().zip(self.ideal.bidegrees()) {
            for mu in bidegree_monomials(spec.m(), spec.n(), i - b.x, e - b.y) {
                let mut row: Vec<(usize, F::Elem)> = g.terms().iter().map(|(t, c)| (index[&t.mul(&mu)], c.clone())).collect();
                row.sort_by_key(|x| x.0);
                echelon.insert(&row);
            }
        }
        let std_idx: Vec<usize> = (0..monos.len()).filter(|k| !echelon.is_pivot(k)).collect();
        let standard = std_idx.iter().enumerate().map(|(pos, &k)| (k, pos)).collect();
        let standard_monos = std_idx.iter().map(|&k| monos[k].clone()).collect();
        Piece { index, echelon, standard, standard_monos }
    }

    /// `dim H^s(y^t; S/I)_{(i,j)}`.
    pub fn koszul_dim(&mut self, s: usize, i: i64, j: i64, t: usize) -> usize {
        let n = self.ideal.spec().n();
        if s > n {
            return 0;
        }
        let dim_k = self.cochain_dim(s, i, j, t);
        if dim_k == 0 {
            return 0;
        }
        let rank_out = if s < n { self.differential_rank(s, i, j, t) } else { 0 };
        let rank_in = if s > 0 { self.differential_rank(s - 1, i, j, t) } else { 0 };
        dim_k - rank_out - rank_in
    }

    fn cochain_dim(&mut self, s: usize, i: i64, j: i64, t: usize) -> usize {
        let n = self.ideal.spec().n();
        let e = j + (t * s) as i64;
        binom_usize(n, s) * self.piece(i, e).dim()
    }

    /// Rank of `K^s → K^{s+1}` in degree `(i, j)`.
    fn differential_rank(&mut self, s: usize, i: i64, j: i64, t: usize) -> usize {
        let spec = self.ideal.spec();
        let (m, n) = (spec.m(), spec.n());
        let src = self.piece(i, j + (t * s) as i64);
        let dst = self.piece(i, j + (t * (s + 1)) as i64);
        if src.dim() == 0 || dst.dim() == 0 {
            return 0;
        }
        let fld = spec.field().clone();
        let one = fld.one();
        let targets = subsets(n, s + 1);
        let target_pos: HashMap<&Vec<usize>, usize> = targets.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let width = dst.dim();
        let mut echelon: SparseEchelon<F, usize> = SparseEchelon::new(fld.clone());
        for sigma in subsets(n, s) {
            for u in &src.standard_monos {
                let mut row: Vec<(usize, F::Elem)> = Vec::new();
                for k in (0..n).filter(|k| !sigma.contains(k)) {
                    let mut ye = vec![0u16; m + n];
                    ye[m + k] = t as u16;
                    let image = dst.reduce_monomial(&u.mul(&Monomial::from_exponents(&ye)), &one);
                    let sign_neg = sigma.iter().filter(|&&x| x < k).count() % 2 == 1;
                    let mut tau = sigma.clone();
                    tau.push(k);
                    tau.sort_unstable();
                    let offset = target_pos[&tau] * width;
                    for (pos, c) in image {
                        row.push((offset + pos, if sign_neg { fld.neg(&c) } else { c }));
                    }
                }
                row.sort_by_key(|x| x.0);
                echelon.insert(&row);
            }
        }
        echelon.rank()
    }

    /// `dim H^s_Q(S/I)_{(i,j)}`: the first value repeated at three consecutive `t`, counting
    /// from [`certified_t`](Self::certified_t).
    pub fn stable_dim(&mut self, s: usize, i: i64, j: i64, t_max: usize) -> Result<OracleEntry> {
        let t_start = self.certified_t(s, j);
        let mut history: Vec<usize> = Vec::new();
        for t in t_start..=t_max.max(t_start) {
            history.push(self.koszul_dim(s, i, j, t));
            if let [.., a, b, c] = history[..] {
                if a == b && b == c {
                    return Ok(OracleEntry { i, j, dim: c, t });
                }
            }
        }
        Err(Error::NotStabilized { i, j, t_max })
    }
}

/// First `t` at which the s-th cochains in y-degree `j` can be nonzero.
fn start_t(s: usize, j: i64) -> usize {
    if s == 0 || j >= 0 {
        1
    } else {
        ((-j) as usize).div_ceil(s).max(1)
    }
}

/// Dimension table of `H^s_Q(S/I)` over the given `(i, j)` window.
pub fn ext_oracle<F: Field>(ideal: &BigradedIdeal<F>, s: usize, window: &[(i64, i64)], t_max: usize) -> Result<Vec<OracleEntry>> {
    let mut oracle = KoszulOracle::new(ideal);
    window.iter().map(|&(i, j)| oracle.stable_dim(s, i, j, t_max)).collect()
}

fn bidegree_monomials(m: usize, n: usize, i: i64, e: i64) -> Vec<Monomial> {
    if i < 0 || e < 0 {
        return Vec::new();
    }
    let xs = monomials_of_degree(m, i as u32);
    let ys = monomials_of_degree(n, e as u32);
    xs.iter().flat_map(|x| ys.iter().map(move |y| x.concat(y))).collect()
}

/// Increasing `k`-subsets of `0..n`, lexicographically.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn binom_usize(n: usize, k: usize) -> usize {
    subsets(n, k).len()
}
