//! Minimal free resolutions, Betti tables, regularity and fine-graded shifts.

use bigraded_lc::field::PrimeField;
use bigraded_lc::groebner::Ideal;
use bigraded_lc::poly::{parse_poly, PolyRing};
use bigraded_lc::resolution::{check_lcm_bound, minimal_resolution, multigraded_shifts, GradedPresentation};

fn main() -> anyhow::Result<()> {
    let r = PolyRing::with_x_vars(PrimeField::default(), 3);

    for k in 1..=3 {
        let p = GradedPresentation::cyclic(&r, Ideal::maximal(&r).power(k).gens())?;
        let res = minimal_resolution(&p);
        println!("S0/m^{k}: reg {}\n{}", res.regularity()?, res.betti_table());
    }

    let gens = ["x1^2*x2", "x2^2*x3", "x1*x3^2"].map(|s| parse_poly(s, &r).unwrap());
    let p = GradedPresentation::monomial_cyclic(&r, &gens)?;
    let shifts = multigraded_shifts(&p)?;
    for (i, s) in shifts.iter().enumerate() {
        println!("position {i}: {s:?}");
    }
    println!("every shift divides the lcm of the first syzygy shifts: {}", check_lcm_bound(&shifts));
    Ok(())
}
