//! Buchberger's algorithm for submodules of graded free modules.
//!
//! Pairs are chosen by sugar degree and then by the smallest lcm. The product criterion is
//! applied only in rank one; the chain criterion is applied in every rank.

use std::collections::{HashMap, HashSet};

use super::vector::{FreeModule, Vector, V};
use crate::field::Field;
use crate::poly::{Monomial, Poly, PolyRing};

/// A reduced Gröbner basis, sorted ascending by lead term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    module: FreeModule<F>,
    elems: Vec<V<F>>,
    buckets: HashMap<usize, Vec<usize>>,
}

struct Pair {
    i: usize,
    j: usize,
    comp: usize,
    lcm: Monomial,
    sugar: i64,
}

fn index_by_comp<E>(elems: &[Vector<E>]) -> HashMap<usize, Vec<usize>> {
    let mut b: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, e) in elems.iter().enumerate() {
        if let Some((c, _, _)) = e.lead() {
            b.entry(*c).or_default().push(i);
        }
    }
    b
}

/// Fully reduces `v` by `elems` (which need not be a Gröbner basis). Elements must be monic.
pub(crate) fn reduce_with<F: Field>(module: &FreeModule<F>, v: &V<F>, elems: &[V<F>], buckets: &HashMap<usize, Vec<usize>>) -> V<F> {
    let fld = module.ring().field();
    let mut terms = v.terms.clone();
    let mut i = 0;
    while i < terms.len() {
        let (c, m, x) = (&terms[i].0, &terms[i].1, &terms[i].2);
        let divisor = buckets.get(c).and_then(|idx| {
            idx.iter().find_map(|&g| {
                let (_, lm, _) = elems[g].lead().unwrap();
                m.div(lm).map(|q| (g, q))
            })
        });
        match divisor {
            Some((g, q)) => {
                let factor = fld.neg(x);
                let tail = module.add_scaled(&terms[i..], &factor, &q, &elems[g]);
                terms.truncate(i);
                terms.extend(tail);
            }
            None => i += 1,
        }
    }
    Vector { terms }
}

impl<F: Field> GroebnerBasis<F> {
    /// Runs Buchberger's algorithm on `gens`. Zero generators are ignored.
    pub fn compute(module: &FreeModule<F>, gens: Vec<V<F>>) -> Self {
        let mut st = State { module, basis: Vec::new(), sugar: Vec::new(), pairs: Vec::new(), pending: HashSet::new(), buckets: HashMap::new() };
        let mut gens: Vec<(i64, V<F>)> = gens.into_iter().filter(|g| !g.is_zero()).map(|g| (st.sugar_of(&g), g)).collect();
        gens.sort_by_key(|(s, _)| *s);
        let mut gens = gens.into_iter().peekable();
        loop {
            // interleave input generators with pairs of no larger sugar
            let next_pair_sugar = st.min_pair().map(|k| st.pairs[k].sugar);
            let take_gen = match (gens.peek(), next_pair_sugar) {
                (Some((s, _)), Some(ps)) => *s <= ps,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if take_gen {
                let (s, g) = gens.next().unwrap();
                st.insert(g, s);
            } else {
                let k = st.min_pair().unwrap();
                let p = st.pairs.swap_remove(k);
                st.pending.remove(&(p.i, p.j));
                if st.chain_criterion(&p) {
                    continue;
                }
                let s = st.s_vector(&p);
                st.insert(s, p.sugar);
            }
        }
        let State { basis, .. } = st;
        Self::from_raw(module.clone(), basis)
    }

    /// Minimalizes and interreduces a generating set whose lead terms already generate the
    /// lead module.
    fn from_raw(module: FreeModule<F>, basis: Vec<V<F>>) -> Self {
        let mut keep: Vec<V<F>> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let (c, lm, _) = g.lead().unwrap();
            let redundant = basis.iter().enumerate().any(|(k, h)| {
                let (hc, hm, _) = h.lead().unwrap();
                k != i && hc == c && hm.divides(lm) && (hm != lm || k < i)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        keep.sort_by(|a, b| {
            let (ac, am, _) = a.lead().unwrap();
            let (bc, bm, _) = b.lead().unwrap();
            module.cmp_pos((*ac, am), (*bc, bm))
        });
        let buckets = index_by_comp(&keep);
        let mut reduced = Vec::with_capacity(keep.len());
        for (i, g) in keep.iter().enumerate() {
            let lead = Vector { terms: vec![g.terms[0].clone()] };
            let tail = Vector { terms: g.terms[1..].to_vec() };
            let others: HashMap<usize, Vec<usize>> = buckets.iter().map(|(c, v)| (*c, v.iter().copied().filter(|&k| k != i).collect())).collect();
            let tail = reduce_with(&module, &tail, &keep, &others);
            reduced.push(module.add(&lead, &tail));
        }
        let buckets = index_by_comp(&reduced);
        let gb = GroebnerBasis { module, elems: reduced, buckets };
        crate::selfcheck::record(crate::selfcheck::Check::Basis, || gb.verify());
        gb
    }

    /// Gröbner basis of an ideal given by generators.
    pub fn ideal(ring: &PolyRing<F>, gens: &[Poly<F::Elem>]) -> Self {
        let module = FreeModule::new(ring.clone(), vec![0], super::vector::ModuleOrderKind::Top);
        let vecs = gens.iter().map(|g| module.from_column(&vec![(0, g.clone())])).collect();
        Self::compute(&module, vecs)
    }

    pub fn module(&self) -> &FreeModule<F> {
        &self.module
    }

    pub fn elements(&self) -> &[V<F>] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Basis elements as polynomials (rank-one modules only).
    pub fn polys(&self) -> Vec<Poly<F::Elem>> {
        self.elems.iter().map(|v| self.module.ring().from_sorted_terms(v.terms.iter().map(|(_, m, c)| (m.clone(), c.clone())).collect())).collect()
    }

    pub fn normal_form(&self, v: &V<F>) -> V<F> {
        reduce_with(&self.module, v, &self.elems, &self.buckets)
    }

    pub fn normal_form_poly(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let v = self.module.from_column(&if f.is_zero() { vec![] } else { vec![(0, f.clone())] });
        let r = self.normal_form(&v);
        self.module.ring().from_terms(r.terms.into_iter().map(|(_, m, c)| (m, c)).collect())
    }

    pub fn contains(&self, v: &V<F>) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn contains_poly(&self, f: &Poly<F::Elem>) -> bool {
        self.normal_form_poly(f).is_zero()
    }

    /// True if the lead term `(comp, mono)` is divisible by some basis lead term.
    pub fn lead_divides(&self, comp: usize, mono: &Monomial) -> bool {
        self.buckets.get(&comp).is_some_and(|idx| idx.iter().any(|&g| self.elems[g].lead().unwrap().1.divides(mono)))
    }

    /// Lead monomials grouped by component.
    pub fn lead_monomials(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.module.rank()];
        for g in &self.elems {
            let (c, m, _) = g.lead().unwrap();
            out[*c].push(m.clone());
        }
        out
    }

    /// Checks Buchberger's criterion directly: every S-vector of every pair of basis
    /// elements reduces to zero.
    pub fn verify(&self) -> bool {
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (ci, mi, _) = self.elems[i].lead().unwrap();
                let (cj, mj, _) = self.elems[j].lead().unwrap();
                if ci != cj {
                    continue;
                }
                let l = mi.lcm(mj);
                let s = s_vector(&self.module, &self.elems[i], &self.elems[j], &l);
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn s_vector<F: Field>(module: &FreeModule<F>, a: &V<F>, b: &V<F>, lcm: &Monomial) -> V<F> {
    let fld = module.ring().field();
    let (_, am, ac) = a.lead().unwrap();
    let (_, bm, bc) = b.lead().unwrap();
    let left = module.mul_term(a, &lcm.div(am).unwrap(), &fld.inv(ac).unwrap());
    let right = module.mul_term(b, &lcm.div(bm).unwrap(), &fld.inv(bc).unwrap());
    module.sub(&left, &right)
}

struct State<'a, F: Field> {
    module: &'a FreeModule<F>,
    basis: Vec<V<F>>,
    sugar: Vec<i64>,
    pairs: Vec<Pair>,
    pending: HashSet<(usize, usize)>,
    buckets: HashMap<usize, Vec<usize>>,
}

impl<F: Field> State<'_, F> {
    fn sugar_of(&self, v: &V<F>) -> i64 {
        v.terms.iter().map(|(c, m, _)| self.module.term_degree(*c, m)).max().unwrap_or(0)
    }

    fn min_pair(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (k, p) in self.pairs.iter().enumerate() {
            best = match best {
                None => Some(k),
                Some(b) => {
                    let q = &self.pairs[b];
                    let less = p.sugar < q.sugar || (p.sugar == q.sugar && self.module.cmp_pos((p.comp, &p.lcm), (q.comp, &q.lcm)).is_lt());
                    if less {
                        Some(k)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best
    }

    fn chain_criterion(&self, p: &Pair) -> bool {
        let Some(idx) = self.buckets.get(&p.comp) else { return false };
        idx.iter().any(|&l| {
            l != p.i
                && l != p.j
                && self.basis[l].lead().unwrap().1.divides(&p.lcm)
                && !self.pending.contains(&(p.i.min(l), p.i.max(l)))
                && !self.pending.contains(&(p.j.min(l), p.j.max(l)))
        })
    }

    fn s_vector(&self, p: &Pair) -> V<F> {
        s_vector(self.module, &self.basis[p.i], &self.basis[p.j], &p.lcm)
    }

    fn insert(&mut self, v: V<F>, sugar: i64) {
        let r = reduce_with(self.module, &v, &self.basis, &self.buckets);
        if r.is_zero() {
            return;
        }
        let r = self.module.make_monic(r);
        let k = self.basis.len();
        let (comp, lm, _) = r.lead().unwrap().clone();
        let rank_one = self.module.rank() == 1;
        if let Some(idx) = self.buckets.get(&comp) {
            for &i in idx {
                let (_, im, _) = self.basis[i].lead().unwrap();
                if rank_one && im.is_coprime(&lm) {
                    continue;
                }
                let lcm = im.lcm(&lm);
                let si = self.sugar[i] + lcm.degree() as i64 - im.degree() as i64;
                let sk = sugar + lcm.degree() as i64 - lm.degree() as i64;
                self.pairs.push(Pair { i, j: k, comp, lcm, sugar: si.max(sk) });
                self.pending.insert((i, k));
            }
        }
        self.basis.push(r);
        self.sugar.push(sugar);
        self.buckets.entry(comp).or_default().push(k);
    }
}
