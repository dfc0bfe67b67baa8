//! Gröbner bases, normal forms, syzygies and Hilbert series over K[x1, x2, x3].

use bigraded_lc::field::PrimeField;
use bigraded_lc::groebner::{format_matrix, syzygies, Ideal, Matrix};
use bigraded_lc::poly::{parse_poly, PolyRing};

fn main() -> anyhow::Result<()> {
    let r = PolyRing::with_x_vars(PrimeField::default(), 3);
    let p = |s: &str| parse_poly(s, &r);

    let ideal = Ideal::new(&r, vec![p("x1^2")?, p("x1*x2 + x2^2")?, p("x2*x3 - x3^2")?]);
    let gb = ideal.groebner_basis();
    println!("reduced basis:");
    for f in gb.polys() {
        println!("  {}", r.format(&f));
    }
    let f = p("x2^3 + x1*x3 + x3^3")?;
    println!("NF({}) = {}", r.format(&f), r.format(&gb.normal_form_poly(&f)));

    let hs = ideal.hilbert_series();
    println!("Hilbert series {hs}, dimension {}", ideal.krull_dimension());

    let row = Matrix::from_rows(1, 3, vec![vec![p("x1")?, p("x2")?, p("x3")?]]);
    let (syz, degs) = syzygies(&r, &[0], &row, &[1, 1, 1]);
    println!("syzygies of [x1 x2 x3] in degrees {degs:?}:\n{}", format_matrix(&r, &syz));
    Ok(())
}
