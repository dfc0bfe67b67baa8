use std::collections::BTreeMap;
use std::fmt;

use super::presentation::{prune_units, GradedPresentation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{compose, syzygies, HilbertSeries, Laurent, Matrix};
use crate::poly::{Monomial, PolyRing};
use crate::selfcheck::{self, Check};

/// A minimal graded free resolution `0 → F_k → … → F_1 → F_0`.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    ring: PolyRing<F>,
    /// `shifts[i]` are the degrees of the basis of `F_i`.
    shifts: Vec<Vec<i64>>,
    /// `maps[i] : F_{i+1} → F_i`.
    maps: Vec<Matrix<F::Elem>>,
    /// Indices of the presentation's generators that survive in `F_0`.
    kept_generators: Vec<usize>,
}

/// Minimal free resolution of `coker(P)` by iterated syzygies and unit cancellation.
pub fn minimal_resolution<F: Field>(p: &GradedPresentation<F>) -> FreeResolution<F> {
    let ring = p.ring().clone();
    let mut d1 = p.matrix().clone();
    let mut f0 = p.row_degrees().to_vec();
    let mut f1 = p.col_degrees().to_vec();
    let kept = prune_units(&ring, None, &mut d1, &mut f0, &mut f1, None, None);
    let mut shifts = vec![f0, f1];
    let mut maps = vec![d1];
    loop {
        let k = maps.len();
        if shifts[k].is_empty() {
            break;
        }
        let (mut syz, mut sdeg) = syzygies(&ring, &shifts[k - 1], &maps[k - 1], &shifts[k]);
        if syz.ncols() == 0 {
            break;
        }
        let (head, _) = maps.split_at_mut(k);
        let mut cur_rows = shifts[k].clone();
        prune_units(&ring, Some(&mut head[k - 1]), &mut syz, &mut cur_rows, &mut sdeg, None, None);
        shifts[k] = cur_rows;
        maps.push(syz);
        shifts.push(sdeg);
    }
    // drop trailing zero modules
    while shifts.len() > 1 && shifts.last().unwrap().is_empty() {
        shifts.pop();
        maps.pop();
    }
    if shifts.len() == 1 && shifts[0].is_empty() {
        maps.clear();
    }
    let res = FreeResolution { ring, shifts, maps, kept_generators: kept };
    selfcheck::record(Check::Composition, || res.compositions_vanish());
    selfcheck::record(Check::Minimality, || res.is_minimal());
    selfcheck::record(Check::BettiHilbert, || res.betti_table().k_polynomial() == p.hilbert_series().k_polynomial(res.ring.nvars()));
    res
}

impl<F: Field> FreeResolution<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    /// Index of the last nonzero free module, `0` for a free or zero module.
    pub fn length(&self) -> usize {
        self.shifts.len() - 1
    }

    pub fn is_zero_module(&self) -> bool {
        self.shifts[0].is_empty()
    }

    pub fn shifts(&self, i: usize) -> &[i64] {
        self.shifts.get(i).map_or(&[], |v| v)
    }

    pub fn all_shifts(&self) -> &[Vec<i64>] {
        &self.shifts
    }

    pub fn rank(&self, i: usize) -> usize {
        self.shifts(i).len()
    }

    /// The differential `F_{i+1} → F_i`.
    pub fn map(&self, i: usize) -> Option<&Matrix<F::Elem>> {
        self.maps.get(i)
    }

    pub fn maps(&self) -> &[Matrix<F::Elem>] {
        &self.maps
    }

    pub fn kept_generators(&self) -> &[usize] {
        &self.kept_generators
    }

    pub fn compositions_vanish(&self) -> bool {
        self.maps.windows(2).all(|w| compose(&self.ring, &w[0], &w[1]).is_zero())
    }

    /// No differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.cols().iter().all(|c| c.iter().all(|(_, p)| p.homogeneous_degree() != Some(0))))
    }

    pub fn betti_table(&self) -> BettiTable {
        BettiTable::from_shifts(&self.shifts)
    }

    /// `max (shift - position)`; fails on the zero module.
    pub fn regularity(&self) -> Result<i64> {
        self.betti_table().regularity().ok_or(Error::ZeroModule)
    }

    /// Degrees of every basis element under a finer grading, propagated from `F_0`.
    /// Every entry of every differential must be a term whose degree closes up.
    pub fn propagate_degrees(&self, f0: Vec<Vec<i64>>, weight: impl Fn(&Monomial) -> Vec<i64>) -> Result<Vec<Vec<Vec<i64>>>> {
        let mut out = vec![f0];
        for (i, m) in self.maps.iter().enumerate() {
            let rows = &out[i];
            let mut cols = Vec::with_capacity(m.ncols());
            for (c, col) in m.cols().iter().enumerate() {
                let mut deg: Option<Vec<i64>> = None;
                for (r, p) in col {
                    for (mono, _) in p.terms() {
                        let w = weight(mono);
                        let d: Vec<i64> = rows[*r].iter().zip(&w).map(|(a, b)| a + b).collect();
                        match &deg {
                            None => deg = Some(d),
                            Some(e) if *e == d => {}
                            Some(_) => return Err(Error::NotMultigraded(format!("column {c} of map {} is not homogeneous", i + 1))),
                        }
                    }
                }
                cols.push(deg.ok_or_else(|| Error::NotMultigraded(format!("zero column {c} in map {}", i + 1)))?);
            }
            out.push(cols);
        }
        Ok(out)
    }
}

/// Betti numbers `β_{i,d}`: the number of basis elements of `F_i` in degree `d`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_shifts(shifts: &[Vec<i64>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, s) in shifts.iter().enumerate() {
            for &d in s {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, d: i64) -> usize {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, usize)> + '_ {
        self.entries.iter().map(|(&(i, d), &b)| (i, d, b))
    }

    /// `max (d - i)` over nonzero entries.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, d)| d - i as i64).max()
    }

    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Every entry multiplied by `k` (the table of a direct sum of `k` copies).
    pub fn scaled(&self, k: usize) -> Self {
        if k == 0 {
            return BettiTable::default();
        }
        BettiTable { entries: self.entries.iter().map(|(&key, &b)| (key, b * k)).collect() }
    }

    /// `Σ_i (-1)^i Σ_d β_{i,d} t^d`, the numerator of the Hilbert series over `(1-t)^nvars`.
    pub fn k_polynomial(&self) -> Laurent {
        self.entries.iter().fold(Laurent::zero(), |acc, (&(i, d), &b)| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            acc.add(&Laurent::monomial(d, sign * b as i64))
        })
    }

    pub fn hilbert_series(&self, nvars: usize) -> HilbertSeries {
        HilbertSeries::from_k_polynomial(self.k_polynomial(), nvars)
    }

    /// CSV with one row per homological position and one column per degree.
    pub fn to_csv(&self) -> String {
        let Some(len) = self.length() else { return "pos\n".into() };
        let dmin = self.entries.keys().map(|k| k.1).min().unwrap();
        let dmax = self.entries.keys().map(|k| k.1).max().unwrap();
        let mut s = String::from("pos");
        for d in dmin..=dmax {
            s.push_str(&format!(",{d}"));
        }
        s.push('\n');
        for i in 0..=len {
            s.push_str(&i.to_string());
            for d in dmin..=dmax {
                s.push_str(&format!(",{}", self.get(i, d)));
            }
            s.push('\n');
        }
        s
    }
}

/// Rows are `d - i` (the usual layout), columns are positions.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(len) = self.length() else { return write!(f, "0") };
        let lo = self.entries.keys().map(|&(i, d)| d - i as i64).min().unwrap();
        let hi = self.regularity().unwrap();
        write!(f, "{:>6}", "")?;
        for i in 0..=len {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        for row in lo..=hi {
            write!(f, "{:>5}:", row)?;
            for i in 0..=len {
                match self.get(i, row + i as i64) {
                    0 => write!(f, "{:>6}", ".")?,
                    b => write!(f, "{b:>6}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Castelnuovo–Mumford regularity of `coker(P)`.
pub fn regularity<F: Field>(p: &GradedPresentation<F>) -> Result<i64> {
    minimal_resolution(p).regularity()
}

/// `Z^m` shifts of every free module in the minimal resolution of a monomially presented module.
pub fn multigraded_shifts<F: Field>(p: &GradedPresentation<F>) -> Result<Vec<Vec<Vec<i64>>>> {
    let md = p.multidegrees().ok_or_else(|| Error::NotMultigraded("no multidegrees attached".into()))?;
    if p.matrix().cols().iter().any(|c| c.iter().any(|(_, q)| !q.is_monomial())) {
        return Err(Error::NotMultigraded("an entry is not a monomial".into()));
    }
    let res = minimal_resolution(p);
    let f0 = res.kept_generators().iter().map(|&r| md.rows[r].clone()).collect();
    res.propagate_degrees(f0, |m| m.exponents().iter().map(|&e| e as i64).collect())
}

/// Every shift at position `>= 1` divides the lcm of the position-1 shifts.
pub fn check_lcm_bound(shifts: &[Vec<Vec<i64>>]) -> bool {
    let Some(first) = shifts.get(1) else { return true };
    let Some(m) = first.first().map(Vec::len) else { return shifts.iter().skip(1).all(Vec::is_empty) };
    let lcm: Vec<i64> = (0..m).map(|k| first.iter().map(|a| a[k]).max().unwrap()).collect();
    shifts.iter().skip(1).flatten().all(|a| a.iter().zip(&lcm).all(|(x, l)| x <= l))
}
