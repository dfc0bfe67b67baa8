//! Exact linear algebra on sparse vectors over a field.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use crate::field::Field;

/// Sparse vector: `(key, coefficient)` pairs sorted by key, coefficients nonzero.
pub type SparseVec<K, E> = Vec<(K, E)>;

/// Incremental row echelon form with monic pivots. The pivot of a row is its smallest key,
/// and no row has a nonzero entry at the pivot of an earlier row.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field, K> {
    field: F,
    rows: Vec<SparseVec<K, F::Elem>>,
    pivots: HashMap<K, usize>,
}

impl<F: Field, K: Ord + Clone + Hash> SparseEchelon<F, K> {
    pub fn new(field: F) -> Self {
        SparseEchelon { field, rows: Vec::new(), pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, key: &K) -> bool {
        self.pivots.contains_key(key)
    }

    pub fn rows(&self) -> &[SparseVec<K, F::Elem>] {
        &self.rows
    }

    /// Eliminates every pivot key from `v`, in increasing key order. The result is the
    /// canonical representative of `v` modulo the row space.
    pub fn reduce(&self, v: &[(K, F::Elem)]) -> SparseVec<K, F::Elem> {
        let f = &self.field;
        let mut work: BTreeMap<K, F::Elem> = v.iter().filter(|(_, c)| !f.is_zero(c)).cloned().collect();
        let mut out = Vec::new();
        while let Some((k, c)) = work.pop_first() {
            match self.pivots.get(&k) {
                None => out.push((k, c)),
                Some(&ri) => {
                    // pivot coefficient is one
                    for (k2, c2) in self.rows[ri].iter().skip(1) {
                        let delta = f.neg(&f.mul(&c, c2));
                        match work.get_mut(k2) {
                            Some(slot) => {
                                *slot = f.add(slot, &delta);
                                if f.is_zero(slot) {
                                    work.remove(k2);
                                }
                            }
                            None => {
                                work.insert(k2.clone(), delta);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Adds `v` to the row space; returns false if it was already in it.
    pub fn insert(&mut self, v: &[(K, F::Elem)]) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let f = &self.field;
        let inv = f.inv(&r[0].1).expect("nonzero pivot");
        let r: SparseVec<K, F::Elem> = r.into_iter().map(|(k, c)| (k, f.mul(&c, &inv))).collect();
        let pk = r[0].0.clone();
        self.pivots.insert(pk, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: &[(K, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }
}

/// `a + c * b` for sorted sparse vectors.
pub fn axpy<F: Field, K: Ord + Clone>(f: &F, a: &[(K, F::Elem)], c: &F::Elem, b: &[(K, F::Elem)]) -> SparseVec<K, F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0.clone(), f.mul(c, &b[j].1)));
            j += 1;
        } else {
            let s = f.add(&a[i].1, &f.mul(c, &b[j].1));
            if !f.is_zero(&s) {
                out.push((a[i].0.clone(), s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of the span of the given sparse vectors.
pub fn rank<F: Field, K: Ord + Clone + Hash>(field: &F, rows: impl IntoIterator<Item = SparseVec<K, F::Elem>>) -> usize {
    let mut e = SparseEchelon::new(field.clone());
    for r in rows {
        e.insert(&r);
    }
    e.rank()
}
