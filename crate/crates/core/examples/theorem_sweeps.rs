//! Sweeps the regularity predictions over y-degree windows and prints the reports.

use bigraded_lc::cli::{verify, SweepReport, Theorem};
use bigraded_lc::cohomology::{corpus, BigradedIdeal};
use bigraded_lc::field::PrimeField;
use bigraded_lc::poly::RingSpec;

fn show(label: &str, ideal: &BigradedIdeal<PrimeField>, mut report: SweepReport) {
    report.metadata.ring = format!("m={} n={}", ideal.spec().m(), ideal.spec().n());
    report.metadata.field = "GF(32003)".into();
    report.metadata.ideal_hash = ideal.gens().iter().map(|f| ideal.spec().s().format(f)).collect::<Vec<_>>().join(", ");
    println!("== {label}\n{report}");
}

fn main() -> anyhow::Result<()> {
    let field = PrimeField::default();
    let js: Vec<i64> = (-6..=-2).rev().collect();

    let regular = corpus::regular_sequence_form(&field, 2, 2);
    show("regular", &regular, verify(Theorem::Regular, &regular, &js, None)?);

    // deg g < d agrees with the closed form; for deg g = d the computed value is deg g - 1
    for (f1, f2) in [("x1^2", "x1*x2"), ("x1", "x1")] {
        let ideal = corpus::two_summand_form(&field, 2, f1, f2)?;
        show("twosummands", &ideal, verify(Theorem::Twosummands, &ideal, &js, None)?);
    }

    let monomial = BigradedIdeal::parse(&RingSpec::new(2, 2, field), &["x1^2*y1*y2", "x2*y1"])?;
    show("monomial", &monomial, verify(Theorem::Monomial, &monomial, &js, None)?);
    show("bounded", &monomial, verify(Theorem::Bounded, &monomial, &js, None)?);
    Ok(())
}
