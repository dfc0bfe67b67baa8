//! Gröbner bases of ideals and of submodules of graded free modules, with the
//! derived tools built on them: syzygies, Hilbert series, ideal arithmetic and
//! sparse linear algebra.

mod buchberger;
mod hilbert;
mod ideal;
pub mod linear;
mod matrix;
mod syzygy;
mod vector;

pub use buchberger::GroebnerBasis;
pub use hilbert::{binomial, monomial_numerator, HilbertSeries, Laurent};
pub use ideal::{gcd, ideal_power, Ideal};
pub use matrix::{column_axpy, compose, format_matrix, Column, Matrix};
pub use syzygy::{syzygies, LiftingBasis};
pub use vector::{FreeModule, ModuleOrderKind, Vector, V};

use crate::field::Field;
use crate::poly::PolyRing;

/// Gröbner basis of the column span of `mat` in `⊕ R(-row_degrees[r])`, under a
/// degree-compatible term-over-position order.
pub fn image_basis<F: Field>(ring: &PolyRing<F>, row_degrees: &[i64], mat: &Matrix<F::Elem>) -> GroebnerBasis<F> {
    let module = FreeModule::new(ring.clone(), row_degrees.to_vec(), ModuleOrderKind::Top);
    let gens = mat.cols().iter().map(|c| module.from_column(c)).collect();
    GroebnerBasis::compute(&module, gens)
}

/// Hilbert series of `coker(mat)` with generators in `row_degrees`, read off the lead terms.
pub fn cokernel_hilbert_series<F: Field>(ring: &PolyRing<F>, row_degrees: &[i64], mat: &Matrix<F::Elem>) -> HilbertSeries {
    let gb = image_basis(ring, row_degrees, mat);
    let parts: Vec<_> = row_degrees.iter().copied().zip(gb.lead_monomials()).collect();
    HilbertSeries::of_monomial_quotient(ring.nvars(), &parts)
}
