//! Seeded families of test inputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ideal::BigradedIdeal;
use crate::error::Result;
use crate::field::Field;
use crate::poly::{monomials_of_degree, Bidegree, Monomial, PolyRing, RingSpec, P};
use crate::resolution::GradedPresentation;

/// Shape limits for random bigraded ideals.
#[derive(Clone, Copy, Debug)]
pub struct CorpusShape {
    pub max_m: usize,
    pub max_n: usize,
    pub max_bidegree: Bidegree,
    pub max_gens: usize,
    pub max_terms: usize,
}

impl Default for CorpusShape {
    fn default() -> Self {
        CorpusShape { max_m: 3, max_n: 3, max_bidegree: Bidegree::new(2, 2), max_gens: 3, max_terms: 3 }
    }
}

fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64))
}

fn bidegree_monomials(m: usize, n: usize, d: Bidegree) -> Vec<Monomial> {
    let xs = monomials_of_degree(m, d.x as u32);
    let ys = monomials_of_degree(n, d.y as u32);
    xs.iter().flat_map(|x| ys.iter().map(move |y| x.concat(y))).collect()
}

fn random_coefficient<F: Field>(field: &F, rng: &mut ChaCha8Rng) -> F::Elem {
    let v = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
    field.from_i64(v)
}

fn random_bidegree(rng: &mut ChaCha8Rng, max: Bidegree) -> Bidegree {
    loop {
        let d = Bidegree::new(rng.gen_range(0..=max.x), rng.gen_range(0..=max.y));
        if d != Bidegree::new(0, 0) {
            return d;
        }
    }
}

fn random_form<F: Field>(spec: &RingSpec<F>, rng: &mut ChaCha8Rng, d: Bidegree, max_terms: usize) -> P<F> {
    let monos = bidegree_monomials(spec.m(), spec.n(), d);
    let k = rng.gen_range(1..=max_terms.min(monos.len()));
    let chosen: Vec<Monomial> = monos.choose_multiple(rng, k).cloned().collect();
    spec.s().from_terms(chosen.into_iter().map(|m| (m, random_coefficient(spec.field(), rng))).collect())
}

/// The `index`-th random bigraded ideal for `seed`.
pub fn random_ideal<F: Field>(field: &F, shape: CorpusShape, seed: u64, index: usize) -> BigradedIdeal<F> {
    let mut rng = rng_for(seed, index);
    let m = rng.gen_range(1..=shape.max_m);
    let n = rng.gen_range(1..=shape.max_n);
    let spec = RingSpec::new(m, n, field.clone());
    let r = rng.gen_range(1..=shape.max_gens);
    let gens = (0..r)
        .map(|_| {
            let d = random_bidegree(&mut rng, shape.max_bidegree);
            random_form(&spec, &mut rng, d, shape.max_terms)
        })
        .collect();
    BigradedIdeal::new(&spec, gens).expect("random forms are bihomogeneous and nonzero")
}

/// `count` random bigraded ideals.
pub fn random_corpus<F: Field>(field: &F, shape: CorpusShape, seed: u64, count: usize) -> Vec<BigradedIdeal<F>> {
    (0..count).map(|k| random_ideal(field, shape, seed, k)).collect()
}

/// Random ideals generated by monomials `u_i v_i`.
pub fn monomial_corpus<F: Field>(field: &F, shape: CorpusShape, seed: u64, count: usize) -> Vec<BigradedIdeal<F>> {
    (0..count)
        .map(|k| {
            let mut rng = rng_for(seed ^ 0x6d6f_6e6f, k);
            let m = rng.gen_range(1..=shape.max_m);
            let n = rng.gen_range(1..=shape.max_n);
            let spec = RingSpec::new(m, n, field.clone());
            let r = rng.gen_range(1..=shape.max_gens);
            let gens = (0..r)
                .map(|_| {
                    let d = random_bidegree(&mut rng, shape.max_bidegree);
                    let mono = bidegree_monomials(m, n, d).choose(&mut rng).unwrap().clone();
                    spec.s().monomial(mono)
                })
                .collect();
            BigradedIdeal::new(&spec, gens).unwrap()
        })
        .collect()
}

/// `r` random monomial generators in `S = K[x1..xm, y1..yn]`, bidegrees at most `(2, 2)`.
pub fn monomial_ideal<F: Field>(field: &F, m: usize, n: usize, r: usize, seed: u64) -> BigradedIdeal<F> {
    let mut rng = rng_for(seed ^ 0x6d6f_6e31, 0);
    let spec = RingSpec::new(m, n, field.clone());
    let gens = (0..r)
        .map(|_| {
            let d = random_bidegree(&mut rng, Bidegree::new(2, 2));
            spec.s().monomial(bidegree_monomials(m, n, d).choose(&mut rng).unwrap().clone())
        })
        .collect();
    BigradedIdeal::new(&spec, gens).unwrap()
}

/// `S0 / (monomials)` in up to `max_m` variables with its fine grading.
pub fn monomial_module<F: Field>(field: &F, max_m: usize, seed: u64, index: usize) -> GradedPresentation<F> {
    let mut rng = rng_for(seed ^ 0x6268, index);
    let m = rng.gen_range(1..=max_m);
    let ring = PolyRing::with_x_vars(field.clone(), m);
    let r = rng.gen_range(1..=4);
    let gens: Vec<P<F>> = (0..r)
        .map(|_| {
            let e: Vec<u16> = (0..m).map(|_| rng.gen_range(0..=3)).collect();
            let e = if e.iter().all(|&x| x == 0) { vec![1; m] } else { e };
            ring.monomial(Monomial::from_exponents(&e))
        })
        .collect();
    GradedPresentation::monomial_cyclic(&ring, &gens).expect("monomial generators")
}

/// `f = Σ x_i^d y_i` with `m = n`, whose coefficients form a regular sequence.
pub fn regular_sequence_form<F: Field>(field: &F, d: u32, n: usize) -> BigradedIdeal<F> {
    let spec = RingSpec::new(n, n, field.clone());
    let text: Vec<String> = (1..=n).map(|i| format!("x{i}^{d}*y{i}")).collect();
    BigradedIdeal::parse(&spec, &[text.join(" + ").as_str()]).unwrap()
}

/// `f = f1 y1 + f2 y2` with `f1, f2` given over `K[x1..xm]`.
pub fn two_summand_form<F: Field>(field: &F, m: usize, f1: &str, f2: &str) -> Result<BigradedIdeal<F>> {
    let spec = RingSpec::new(m, 2, field.clone());
    let f = format!("({f1})*y1 + ({f2})*y2");
    BigradedIdeal::parse(&spec, &[f.as_str()])
}

/// Pairs `(g, h)` with `g` a random form of `S0` and `h = Σ l_i y_i` for random linear forms `l_i`.
pub fn regsum_pairs<F: Field>(field: &F, n: usize, seed: u64, count: usize) -> Vec<(P<F>, BigradedIdeal<F>)> {
    (0..count)
        .map(|k| {
            let mut rng = rng_for(seed ^ 0x7273, k);
            let spec = RingSpec::new(n, n, field.clone());
            let s0 = spec.s0();
            let dg = rng.gen_range(0..=2u32);
            let g = loop {
                let monos = monomials_of_degree(n, dg);
                let t = rng.gen_range(1..=monos.len().min(3));
                let g = s0.from_terms(monos.choose_multiple(&mut rng, t).map(|m| (m.clone(), random_coefficient(spec.field(), &mut rng))).collect());
                if !g.is_zero() {
                    break g;
                }
            };
            let h = loop {
                let mut terms: Vec<(Monomial, F::Elem)> = Vec::new();
                for yi in 0..n {
                    for xi in 0..n {
                        if rng.gen_bool(0.6) {
                            let mut e = vec![0u16; 2 * n];
                            e[xi] = 1;
                            e[n + yi] = 1;
                            terms.push((Monomial::from_exponents(&e), random_coefficient(spec.field(), &mut rng)));
                        }
                    }
                }
                let h = spec.s().from_terms(terms);
                if !h.is_zero() {
                    break h;
                }
            };
            (g, BigradedIdeal::new(&spec, vec![h]).unwrap())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn deterministic_and_in_shape() {
        let f = PrimeField::default();
        let a = random_corpus(&f, CorpusShape::default(), 7, 25);
        let b = random_corpus(&f, CorpusShape::default(), 7, 25);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.gens(), y.gens());
            assert!(x.spec().m() <= 3 && x.spec().n() <= 3 && x.len() <= 3);
            assert!(x.bidegrees().iter().all(|d| d.x <= 2 && d.y <= 2 && (d.x, d.y) != (0, 0)));
        }
        assert!(monomial_corpus(&f, CorpusShape::default(), 7, 10).iter().all(|i| i.is_monomial()));
        let i = monomial_ideal(&f, 2, 3, 4, 11);
        assert!(i.is_monomial() && i.len() == 4 && i.spec().n() == 3);
    }

    #[test]
    fn families() {
        let f = PrimeField::default();
        let i = regular_sequence_form(&f, 2, 2);
        assert_eq!(i.spec().s().format(&i.gens()[0]), "x1^2*y1 + x2^2*y2");
        let i = two_summand_form(&f, 2, "x1^2", "x1*x2").unwrap();
        assert_eq!(i.bidegrees()[0], Bidegree::new(2, 1));
        for (g, h) in regsum_pairs(&f, 2, 3, 10) {
            assert!(g.homogeneous_degree().is_some());
            assert_eq!(h.bidegrees()[0], Bidegree::new(1, 1));
        }
        let p = monomial_module(&f, 4, 1, 0);
        assert!(p.multidegrees().is_some());
    }
}
