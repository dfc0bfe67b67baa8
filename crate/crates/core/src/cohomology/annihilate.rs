use super::component::top_component_presentation;
use super::ideal::BigradedIdeal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::linear::SparseEchelon;
use crate::groebner::{image_basis, Vector};
use crate::poly::Monomial;

/// Default search cap `4 (-j) max(b_i) r + 16`.
pub fn default_cap<F: Field>(ideal: &BigradedIdeal<F>, j: i64) -> usize {
    (4 * (-j).max(0) * ideal.max_y_degree() * ideal.len() as i64 + 16) as usize
}

/// Least `t <= cap` with `c(I)^t H^n_Q(S/I)_j = 0`.
///
/// Works on normal forms modulo the image of the top presentation: the K-span of
/// `c(I)^t · generators` is grown one factor at a time and kept as an echelon basis.
pub fn annihilation_exponent<F: Field>(ideal: &BigradedIdeal<F>, j: i64, cap: usize) -> Result<usize> {
    if j > 0 {
        return Err(Error::InvalidArgument(format!("y-degree {j} must be <= 0")));
    }
    let top = top_component_presentation(ideal, j).presentation;
    let ring = top.ring().clone();
    let fld = ring.field().clone();
    let gb = image_basis(&ring, top.row_degrees(), top.matrix());
    let module = gb.module().clone();
    let mut current: Vec<Vector<F::Elem>> =
        (0..top.num_generators()).map(|r| gb.normal_form(&module.basis_vector(r))).filter(|v| !v.is_zero()).collect();
    let content = ideal.content_ideal();
    let factors = content.gens();
    for t in 0..=cap {
        if current.is_empty() {
            return Ok(t);
        }
        let mut echelon: SparseEchelon<F, (usize, Monomial)> = SparseEchelon::new(fld.clone());
        let mut next = Vec::new();
        for v in &current {
            for f in factors {
                let w = gb.normal_form(&module.mul_poly(v, f));
                let mut key: Vec<((usize, Monomial), F::Elem)> = w.terms().iter().map(|(c, m, x)| ((*c, m.clone()), x.clone())).collect();
                key.sort_by(|a, b| a.0.cmp(&b.0));
                if echelon.insert(&key) {
                    next.push(w);
                }
            }
        }
        current = next;
    }
    Err(Error::NotFound { cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::RingSpec;

    #[test]
    fn exponents_for_a_linear_form() {
        let sp = RingSpec::new(2, 2, PrimeField::default());
        let i = BigradedIdeal::parse(&sp, &["x1*y1 + x2*y2"]).unwrap();
        assert_eq!(annihilation_exponent(&i, -2, 50).unwrap(), 1);
        assert_eq!(annihilation_exponent(&i, -3, 50).unwrap(), 2);
        assert_eq!(annihilation_exponent(&i, -1, 50).unwrap(), 0);
        assert!(matches!(annihilation_exponent(&i, -3, 1), Err(Error::NotFound { cap: 1 })));
        assert_eq!(default_cap(&i, -3), 4 * 3 + 16);
    }
}
