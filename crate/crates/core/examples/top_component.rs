//! The top local cohomology component of S/(f) for f = x1^d y1 + x2^d y2 across y-degrees.

use bigraded_lc::cohomology::{corpus, predicted_reg_regular_sequence, top_component_presentation};
use bigraded_lc::field::PrimeField;
use bigraded_lc::groebner::format_matrix;
use bigraded_lc::resolution::minimal_resolution;

fn main() -> anyhow::Result<()> {
    let field = PrimeField::default();
    let ideal = corpus::regular_sequence_form(&field, 1, 2);
    let p = top_component_presentation(&ideal, -3).presentation;
    println!("j = -3, generators in degrees {:?}:\n{}", p.row_degrees(), format_matrix(p.ring(), p.matrix()));

    for d in 1..=3 {
        let ideal = corpus::regular_sequence_form(&field, d, 2);
        println!("d = {d}");
        for j in (-7..=-2).rev() {
            let p = top_component_presentation(&ideal, j).presentation;
            let reg = minimal_resolution(&p).regularity()?;
            let want = predicted_reg_regular_sequence(d as i64, 2, j);
            println!("  j {j:>3}  rank {:>2}  reg {reg:>3}  expected {want:>3}", p.row_degrees().len());
        }
    }
    Ok(())
}
