use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Ideal, Matrix};
use crate::poly::{Bidegree, IdealFile, Monomial, PolyError, RingSpec, P};

/// An ideal of `S` given by nonzero bihomogeneous generators.
#[derive(Clone, Debug)]
pub struct BigradedIdeal<F: Field> {
    spec: RingSpec<F>,
    gens: Vec<P<F>>,
    bidegrees: Vec<Bidegree>,
}

impl<F: Field> BigradedIdeal<F> {
    pub fn new(spec: &RingSpec<F>, gens: Vec<P<F>>) -> Result<Self> {
        let mut bidegrees = Vec::with_capacity(gens.len());
        for g in &gens {
            if g.is_zero() {
                return Err(PolyError::ZeroPolynomial.into());
            }
            bidegrees.push(spec.bidegree_of(g)?);
        }
        Ok(BigradedIdeal { spec: spec.clone(), gens, bidegrees })
    }

    pub fn parse(spec: &RingSpec<F>, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|g| spec.parse(g)).collect::<Result<Vec<_>, _>>()?;
        Self::new(spec, polys)
    }

    /// Builds the ideal described by a parsed ideal file over `field`; zero lines are skipped.
    pub fn from_file(file: &IdealFile, field: F) -> Result<Self> {
        let spec = RingSpec::new(file.m, file.n, field);
        let polys = file.generators.iter().map(|g| spec.parse(g)).collect::<Result<Vec<_>, _>>()?;
        Self::new(&spec, polys.into_iter().filter(|p| !p.is_zero()).collect())
    }

    pub fn zero(spec: &RingSpec<F>) -> Self {
        BigradedIdeal { spec: spec.clone(), gens: Vec::new(), bidegrees: Vec::new() }
    }

    pub fn spec(&self) -> &RingSpec<F> {
        &self.spec
    }

    pub fn gens(&self) -> &[P<F>] {
        &self.gens
    }

    pub fn bidegrees(&self) -> &[Bidegree] {
        &self.bidegrees
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_y_degree(&self) -> i64 {
        self.bidegrees.iter().map(|b| b.y).max().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    /// Ideal of `S0` generated by the x-coefficients of all generators.
    pub fn content_ideal(&self) -> Ideal<F> {
        let mut gens = Vec::new();
        for g in &self.gens {
            for (_, c) in self.spec.content_coefficients(g).expect("generators are bihomogeneous") {
                gens.push(c);
            }
        }
        Ideal::new(self.spec.s0(), gens)
    }

    /// Splits every generator `u * v` into its x-part `u` and y-exponent of `v`.
    pub fn monomial_parts(&self) -> Result<Vec<(Monomial, Monomial)>> {
        let m = self.spec.m();
        self.gens
            .iter()
            .enumerate()
            .map(|(i, g)| if g.is_monomial() { Ok(g.lead_monomial().unwrap().split(m)) } else { Err(Error::NotMonomial(i)) })
            .collect()
    }

    /// The module `S / I` as a one-row bigraded presentation.
    pub fn quotient_module(&self) -> BigradedModule<F> {
        let r = self.gens.len();
        BigradedModule {
            spec: self.spec.clone(),
            row_bidegrees: vec![Bidegree::new(0, 0)],
            matrix: Matrix::from_rows(1, r, vec![self.gens.clone()]),
            col_bidegrees: self.bidegrees.clone(),
        }
    }
}

/// `coker(⊕ S(-col_bidegrees) → ⊕ S(-row_bidegrees))` with bihomogeneous entries.
#[derive(Clone, Debug)]
pub struct BigradedModule<F: Field> {
    spec: RingSpec<F>,
    row_bidegrees: Vec<Bidegree>,
    matrix: Matrix<F::Elem>,
    col_bidegrees: Vec<Bidegree>,
}

impl<F: Field> BigradedModule<F> {
    pub fn new(spec: &RingSpec<F>, row_bidegrees: Vec<Bidegree>, matrix: Matrix<F::Elem>, col_bidegrees: Vec<Bidegree>) -> Result<Self> {
        if matrix.nrows() != row_bidegrees.len() || matrix.ncols() != col_bidegrees.len() {
            return Err(Error::InvalidArgument("matrix shape does not match the bidegree lists".into()));
        }
        for (c, col) in matrix.cols().iter().enumerate() {
            for (r, p) in col {
                let b = spec.bidegree_of(p)?;
                if b != col_bidegrees[c] - row_bidegrees[*r] {
                    return Err(Error::NotHomogeneous { row: *r, col: c });
                }
            }
        }
        Ok(BigradedModule { spec: spec.clone(), row_bidegrees, matrix, col_bidegrees })
    }

    pub fn spec(&self) -> &RingSpec<F> {
        &self.spec
    }

    pub fn matrix(&self) -> &Matrix<F::Elem> {
        &self.matrix
    }

    pub fn row_bidegrees(&self) -> &[Bidegree] {
        &self.row_bidegrees
    }

    pub fn col_bidegrees(&self) -> &[Bidegree] {
        &self.col_bidegrees
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::groebner::Ideal;

    fn spec(m: usize, n: usize) -> RingSpec<PrimeField> {
        RingSpec::new(m, n, PrimeField::default())
    }

    fn s0_ideal(sp: &RingSpec<PrimeField>, gens: &[&str]) -> Ideal<PrimeField> {
        Ideal::new(sp.s0(), gens.iter().map(|g| sp.parse_s0(g).unwrap()).collect())
    }

    #[test]
    fn content_ideals() {
        let sp = spec(2, 2);
        let i = BigradedIdeal::parse(&sp, &["x1*y1 + x2*y2"]).unwrap();
        assert!(i.content_ideal().same_as(&s0_ideal(&sp, &["x1", "x2"])));
        let i = BigradedIdeal::parse(&sp, &["x1^2*y1 + x1*x2*y2"]).unwrap();
        assert!(i.content_ideal().same_as(&s0_ideal(&sp, &["x1^2", "x1*x2"])));
        let i = BigradedIdeal::parse(&sp, &["x1*y1", "x2*y2"]).unwrap();
        assert!(i.content_ideal().same_as(&s0_ideal(&sp, &["x1", "x2"])));
    }

    #[test]
    fn rejects_bad_generators() {
        let sp = spec(2, 2);
        assert!(BigradedIdeal::parse(&sp, &["x1 + y1"]).is_err());
        assert!(BigradedIdeal::parse(&sp, &["0"]).is_err());
    }

    #[test]
    fn monomial_parts() {
        let sp = spec(2, 2);
        let i = BigradedIdeal::parse(&sp, &["x1^2*y1*y2", "x2*y1"]).unwrap();
        let parts = i.monomial_parts().unwrap();
        assert_eq!(parts[0].0.exponents(), &[2, 0]);
        assert_eq!(parts[0].1.exponents(), &[1, 1]);
        let bad = BigradedIdeal::parse(&sp, &["x1*y1", "x1*y1 + x2*y2"]).unwrap();
        assert!(matches!(bad.monomial_parts(), Err(Error::NotMonomial(1))));
    }
}
