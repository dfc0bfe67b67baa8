//! Graded presentations over a polynomial ring, their minimal free resolutions,
//! Betti tables, regularity, fine-graded shifts and homology of complexes of free modules.

mod free;
mod presentation;

pub use free::{check_lcm_bound, minimal_resolution, multigraded_shifts, regularity, BettiTable, FreeResolution};
pub use presentation::{subquotient, GradedPresentation, Multidegrees};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{compose, syzygies, Matrix};
use crate::poly::PolyRing;

/// `ker(A) / im(B)` for graded maps `B : F2 → F1` and `A : F1 → F0` with `A B = 0`.
///
/// `f0`, `f1`, `f2` are the degrees of the bases. `A` may have zero rows, in which case
/// the result is `coker(B)`.
pub fn homology_presentation<F: Field>(
    ring: &PolyRing<F>,
    a: &Matrix<F::Elem>,
    f0: &[i64],
    f1: &[i64],
    b: &Matrix<F::Elem>,
    f2: &[i64],
) -> Result<GradedPresentation<F>> {
    if a.ncols() != f1.len() || b.nrows() != f1.len() || a.nrows() != f0.len() || b.ncols() != f2.len() {
        return Err(Error::InvalidArgument("map shapes do not match the degree lists".into()));
    }
    if !compose(ring, a, b).is_zero() {
        return Err(Error::CompositionNonzero);
    }
    if a.nrows() == 0 {
        return Ok(GradedPresentation::new(ring, f1.to_vec(), b.clone(), f2.to_vec())?.pruned());
    }
    let (k, kdeg) = syzygies(ring, f0, a, f1);
    Ok(subquotient(ring, f1, &k, &kdeg, b, f2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::parse_poly;

    fn setup() -> (PolyRing<PrimeField>, Matrix<u32>, Matrix<u32>) {
        let r = PolyRing::with_x_vars(PrimeField::default(), 2);
        let p = |s: &str| parse_poly(s, &r).unwrap();
        let a = Matrix::from_rows(1, 2, vec![vec![p("x1"), p("x2")]]);
        let b = Matrix::from_rows(2, 1, vec![vec![p("x2")], vec![p("-x1")]]);
        (r, a, b)
    }

    #[test]
    fn kernel_of_koszul_row() {
        let (r, a, _) = setup();
        let h = homology_presentation(&r, &a, &[0], &[1, 1], &Matrix::zero(2, 0), &[]).unwrap();
        assert_eq!(h.row_degrees(), &[2]);
        assert_eq!(h.col_degrees().len(), 0);
    }

    #[test]
    fn cokernel_when_target_is_zero() {
        let (r, a, _) = setup();
        let h = homology_presentation(&r, &Matrix::zero(0, 1), &[], &[0], &a, &[1, 1]).unwrap();
        assert_eq!(h.hilbert_series().to_string(), "1");
    }

    #[test]
    fn exact_in_the_middle() {
        let (r, a, b) = setup();
        let h = homology_presentation(&r, &a, &[0], &[1, 1], &b, &[2]).unwrap();
        assert!(h.is_zero());
    }

    #[test]
    fn rejects_nonzero_composition() {
        let (r, a, _) = setup();
        let p = parse_poly("x1", &r).unwrap();
        let bad = Matrix::from_rows(2, 1, vec![vec![p.clone()], vec![p]]);
        assert!(matches!(homology_presentation(&r, &a, &[0], &[1, 1], &bad, &[2]), Err(Error::CompositionNonzero)));
    }
}
