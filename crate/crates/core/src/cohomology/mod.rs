//! Graded components of local cohomology with support in `Q = (y)`.

mod annihilate;
mod component;
pub mod corpus;
mod ideal;
mod oracle;
mod predict;

pub use annihilate::{annihilation_exponent, default_cap};
pub use component::{
    bigraded_resolution, cohomology_component, induce_map, top_component_presentation, z_count, z_exponents, BigradedResolution, CohomologyComponent,
    InducedComplex, InducedMap, Provenance, ZBasisElement,
};
pub use ideal::{BigradedIdeal, BigradedModule};
pub use oracle::{ext_oracle, KoszulOracle, OracleEntry};
pub use predict::{
    monomial_top_module, monomial_top_multigraded, monomial_top_predictor, predicted_reg_regular_sequence, predicted_reg_two_summands, regsum_check,
    two_summand_coefficients, two_summand_degrees, x_shift_bound,
};
