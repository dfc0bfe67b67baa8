use super::buchberger::GroebnerBasis;
use super::hilbert::HilbertSeries;
use super::matrix::Matrix;
use super::syzygy::syzygies;
use crate::field::Field;
use crate::poly::{monomials_of_degree, Poly, PolyRing, P};

/// An ideal given by generators; zero generators are dropped on construction.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: PolyRing<F>,
    gens: Vec<P<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &PolyRing<F>, gens: Vec<P<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: gens.into_iter().filter(|g| !g.is_zero()).collect() }
    }

    pub fn zero(ring: &PolyRing<F>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &PolyRing<F>) -> Self {
        Ideal::new(ring, vec![ring.one()])
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &PolyRing<F>) -> Self {
        Ideal::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect())
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[P<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner_basis(&self) -> GroebnerBasis<F> {
        GroebnerBasis::ideal(&self.ring, &self.gens)
    }

    pub fn contains(&self, f: &P<F>) -> bool {
        self.groebner_basis().contains_poly(f)
    }

    pub fn is_unit(&self) -> bool {
        self.contains(&self.ring.one())
    }

    pub fn is_subset_of(&self, other: &Ideal<F>) -> bool {
        let gb = other.groebner_basis();
        self.gens.iter().all(|g| gb.contains_poly(g))
    }

    pub fn same_as(&self, other: &Ideal<F>) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| (a, b))).map(|(a, b)| self.ring.mul(a, b)).collect();
        Ideal::new(&self.ring, dedup(gens))
    }

    /// `I^k`, generated by all k-fold products of generators; `I^0` is the unit ideal.
    pub fn power(&self, k: usize) -> Ideal<F> {
        (0..k).fold(Ideal::unit(&self.ring), |acc, _| acc.product(self))
    }

    /// Series of `R / I`.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let gb = self.groebner_basis();
        let leads = gb.lead_monomials().into_iter().next().unwrap_or_default();
        HilbertSeries::of_monomial_quotient(self.ring.nvars(), &[(0, leads)])
    }

    /// Krull dimension of `R / I`; `-1` when `I` is the unit ideal.
    pub fn krull_dimension(&self) -> i64 {
        self.hilbert_series().dimension()
    }

    /// Least `k >= 0` with `m^k ⊆ I`, where `m` is generated by the variables,
    /// or `None` if `R / I` is not of finite length.
    pub fn maximal_power_contained(&self) -> Option<usize> {
        if self.krull_dimension() > 0 {
            return None;
        }
        let gb = self.groebner_basis();
        (0..).find(|&k| monomials_of_degree(self.ring.nvars(), k as u32).into_iter().all(|m| gb.contains_poly(&self.ring.monomial(m))))
    }
}

/// `I^k` as a free function.
pub fn ideal_power<F: Field>(ideal: &Ideal<F>, k: usize) -> Ideal<F> {
    ideal.power(k)
}

fn dedup<E: PartialEq>(mut v: Vec<Poly<E>>) -> Vec<Poly<E>> {
    let mut out: Vec<Poly<E>> = Vec::with_capacity(v.len());
    for p in v.drain(..) {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Monic gcd of two homogeneous polynomials, read off the syzygy `(f2/g, -f1/g)`.
pub fn gcd<F: Field>(ring: &PolyRing<F>, f1: &P<F>, f2: &P<F>) -> P<F> {
    if f1.is_zero() {
        return ring.make_monic(f2);
    }
    if f2.is_zero() {
        return ring.make_monic(f1);
    }
    let d1 = f1.homogeneous_degree().expect("homogeneous input") as i64;
    let d2 = f2.homogeneous_degree().expect("homogeneous input") as i64;
    let mat = Matrix::from_rows(1, 2, vec![vec![f1.clone(), f2.clone()]]);
    let (syz, degs) = syzygies(ring, &[0], &mat, &[d1, d2]);
    // the kernel is free of rank one; its generator has the least degree
    let k = (0..syz.ncols()).min_by_key(|&c| degs[c]).expect("kernel of a 1x2 map is nonzero");
    let q = syz.entry(1, k).expect("syzygy has nonzero second entry");
    ring.make_monic(&ring.exact_div(f1, q).expect("f1 divisible by f1/g"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::parse_poly;

    fn ring(m: usize) -> PolyRing<PrimeField> {
        PolyRing::with_x_vars(PrimeField::default(), m)
    }

    fn ideal(r: &PolyRing<PrimeField>, gens: &[&str]) -> Ideal<PrimeField> {
        Ideal::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect())
    }

    #[test]
    fn powers() {
        let r = ring(2);
        let m = ideal(&r, &["x1", "x2"]);
        assert!(m.power(2).same_as(&ideal(&r, &["x1^2", "x1*x2", "x2^2"])));
        assert!(m.power(0).is_unit());
        let i = ideal(&r, &["x1^2", "x2"]);
        assert!(ideal_power(&i, 2).same_as(&ideal(&r, &["x1^4", "x1^2*x2", "x2^2"])));
    }

    #[test]
    fn dimensions() {
        let r = ring(2);
        assert_eq!(ideal(&r, &["x1"]).krull_dimension(), 1);
        assert_eq!(ideal(&r, &["x1", "x2"]).krull_dimension(), 0);
        assert_eq!(Ideal::zero(&ring(3)).krull_dimension(), 3);
        assert_eq!(Ideal::unit(&r).krull_dimension(), -1);
        let h = ideal(&r, &["x1"]).hilbert_series();
        assert_eq!(h.to_string(), "(1)/(1-t)");
        let h = ideal(&r, &["x1", "x2"]).power(2).hilbert_series();
        assert_eq!(h.to_string(), "1 + 2*t");
    }

    #[test]
    fn maximal_power() {
        let r = ring(2);
        assert_eq!(ideal(&r, &["x1^2", "x2"]).maximal_power_contained(), Some(2));
        assert_eq!(ideal(&r, &["x1", "x2"]).power(3).maximal_power_contained(), Some(3));
        assert_eq!(ideal(&r, &["x1"]).maximal_power_contained(), None);
        assert_eq!(Ideal::unit(&r).maximal_power_contained(), Some(0));
    }

    #[test]
    fn gcds() {
        let r = ring(2);
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert_eq!(r.format(&gcd(&r, &p("x1^2"), &p("x1*x2"))), "x1");
        assert_eq!(r.format(&gcd(&r, &p("x1"), &p("x2"))), "1");
        let g = gcd(&r, &p("x1^2 - x2^2"), &p("x1^2 + 2*x1*x2 + x2^2"));
        assert_eq!(r.format(&g), "x1 + x2");
        assert_eq!(r.format(&gcd(&r, &p("3*x1*x2"), &Poly::zero())), "x1*x2");
    }
}
