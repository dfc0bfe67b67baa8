//! Every component H^s_Q(S/I)_j from one bigraded resolution, with Hilbert functions and regularity.

use bigraded_lc::cohomology::{bigraded_resolution, BigradedIdeal};
use bigraded_lc::field::PrimeField;
use bigraded_lc::poly::RingSpec;
use bigraded_lc::resolution::minimal_resolution;

fn main() -> anyhow::Result<()> {
    let spec = RingSpec::new(2, 2, PrimeField::default());
    let ideal = BigradedIdeal::parse(&spec, &["x1*y1^2", "x2*y1*y2"])?;
    let res = bigraded_resolution(&ideal.quotient_module(), 4)?;
    println!("resolution of S/I has length {}", res.length());
    for s in 0..=2 {
        for j in (-6..=-2).rev() {
            let p = res.component(s, j)?.presentation;
            if p.is_zero() {
                println!("s {s} j {j:>3}  zero");
                continue;
            }
            let hf: Vec<i64> = (0..6).map(|d| p.hilbert_function(d)).collect();
            let reg = minimal_resolution(&p).regularity()?;
            println!("s {s} j {j:>3}  dim {:>2}  reg {reg:>2}  hf {hf:?}", p.krull_dimension());
        }
    }
    Ok(())
}
