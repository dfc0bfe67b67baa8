//! Least powers of the content ideal killing the top component, with a fitted linear bound.

use bigraded_lc::cli::LinearFit;
use bigraded_lc::cohomology::{annihilation_exponent, default_cap, BigradedIdeal};
use bigraded_lc::field::PrimeField;
use bigraded_lc::poly::RingSpec;

fn main() -> anyhow::Result<()> {
    let spec = RingSpec::new(3, 2, PrimeField::default());
    for gens in [&["x1*y1 + x2*y2"][..], &["x1^2*y1 + x2*x3*y2", "x3*y1^2"]] {
        let ideal = BigradedIdeal::parse(&spec, gens)?;
        let mut points = Vec::new();
        for j in (-8..=-2).rev() {
            let t = annihilation_exponent(&ideal, j, default_cap(&ideal, j))?;
            println!("{gens:?} j {j:>3}  t {t}");
            points.push((-j as f64, t as f64));
        }
        if let Some(fit) = LinearFit::least_squares(&points) {
            println!("  least squares: {fit}\n  bound: {}", fit.upper_envelope());
        }
    }
    Ok(())
}
