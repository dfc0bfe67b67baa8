//! Theorem sweeps over a window of y-degrees.

use rayon::prelude::*;

use super::report::{LinearFit, SweepReport, SweepRow};
use crate::cohomology::{
    annihilation_exponent, bigraded_resolution, default_cap, monomial_top_module, monomial_top_multigraded, predicted_reg_regular_sequence,
    predicted_reg_two_summands, top_component_presentation, two_summand_degrees, x_shift_bound, BigradedIdeal,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::poly::P;
use crate::resolution::{check_lcm_bound, minimal_resolution, multigraded_shifts, GradedPresentation};

/// Statements that `verify` can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Theorem {
    /// A power of the content ideal kills the top component; reports a fitted bound.
    Annihilate,
    /// `0 <= reg <= k t(j) - 1` when the content ideal is m0-primary.
    Primary,
    /// The top component has the dimension of `S0 / c(I)`.
    Dim,
    /// `reg = -dj - n` for `f = Σ f_i y_i` with a regular sequence of degree `d`.
    Regular,
    /// The piecewise formula for `f = f_1 y_1 + f_2 y_2`.
    Twosummands,
    /// `reg` of the top component for `S/(gh)` exceeds that for `S/(h)` by `deg g`.
    Regsum,
    /// For monomial `I` the top component is `(S0/J)^k`.
    Monomial,
    /// Multigraded shifts divide the lcm of the first syzygy shifts.
    Bh,
    /// `|reg H^s_Q(S/I)_j|` stays bounded over all `s` and `j`.
    Bounded,
    /// Linear growth of `reg H^k_Q` for `k = n-1, n` on a hypersurface; exploratory.
    Top,
}

/// `(reg, dim)` of a presentation; `reg` is `None` for the zero module.
pub fn measure<F: Field>(p: &GradedPresentation<F>) -> (Option<i64>, i64) {
    let res = minimal_resolution(p);
    (res.regularity().ok(), p.krull_dimension())
}

fn top_row<F: Field>(ideal: &BigradedIdeal<F>, j: i64) -> (SweepRow, GradedPresentation<F>) {
    let top = top_component_presentation(ideal, j).presentation;
    let mut row = SweepRow::new(ideal.spec().n(), j);
    (row.reg, row.dim) = measure(&top);
    (row, top)
}

fn par_rows(js: &[i64], f: impl Fn(i64) -> Result<SweepRow> + Sync + Send) -> Result<Vec<SweepRow>> {
    js.par_iter().map(|&j| f(j)).collect()
}

fn single_form<F: Field>(ideal: &BigradedIdeal<F>, what: &str) -> Result<P<F>> {
    match ideal.gens() {
        [f] => Ok(f.clone()),
        gens => Err(Error::HypothesisViolated(format!("{what} needs a single generator, got {}", gens.len()))),
    }
}

/// Runs `theorem` over the y-degrees `js`; `g` is only used by `regsum`.
pub fn verify<F: Field>(theorem: Theorem, ideal: &BigradedIdeal<F>, js: &[i64], g: Option<&P<F>>) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    match theorem {
        Theorem::Regular => regular(ideal, js, &mut report)?,
        Theorem::Twosummands => two_summands(ideal, js, &mut report)?,
        Theorem::Regsum => {
            let g = g.ok_or_else(|| Error::InvalidArgument("regsum needs a factor g".into()))?;
            regsum(ideal, g, js, &mut report)?
        }
        Theorem::Monomial => monomial(ideal, js, &mut report)?,
        Theorem::Annihilate => annihilate(ideal, js, &mut report)?,
        Theorem::Primary => primary(ideal, js, &mut report)?,
        Theorem::Dim => dim(ideal, js, &mut report)?,
        Theorem::Bh => bh(ideal, js, &mut report)?,
        Theorem::Bounded => bounded(ideal, js, &mut report)?,
        Theorem::Top => top(ideal, js, &mut report)?,
    }
    Ok(report)
}

fn regular<F: Field>(ideal: &BigradedIdeal<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    let spec = ideal.spec();
    let f = single_form(ideal, "regular")?;
    let b = spec.bidegree_of(&f)?;
    if b.y != 1 {
        return Err(Error::HypothesisViolated(format!("bidegree {b} is not of the form (d,1)")));
    }
    let (m, n) = (spec.m(), spec.n());
    let coeffs = spec.content_coefficients(&f)?;
    let content = Ideal::new(spec.s0(), coeffs.into_iter().map(|(_, c)| c).collect());
    if content.gens().len() != n || m < n || content.krull_dimension() != (m - n) as i64 {
        return Err(Error::HypothesisViolated("the coefficients of y1..yn are not a regular sequence".into()));
    }
    let asserted = m == n;
    if !asserted {
        report.notes.push(format!("m = {m} > n = {n}: values recorded, not asserted"));
    }
    report.rows = par_rows(js, |j| {
        let (mut row, _) = top_row(ideal, j);
        if asserted && j <= -(n as i64) {
            let p = predicted_reg_regular_sequence(b.x, n as i64, j);
            row.predicted = Some(p);
            row.pass = Some(row.reg == Some(p));
        }
        Ok(row)
    })?;
    Ok(())
}

fn two_summands<F: Field>(ideal: &BigradedIdeal<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    let f = single_form(ideal, "twosummands")?;
    let (d, degg) = two_summand_degrees(ideal.spec(), &f)?;
    report.notes.push(format!("d = {d}, deg gcd(f1, f2) = {degg}"));
    report.rows = par_rows(js, |j| {
        let (mut row, _) = top_row(ideal, j);
        if j <= -2 {
            let p = predicted_reg_two_summands(d, degg, j);
            row.predicted = Some(p);
            row.pass = Some(row.reg == Some(p));
        }
        Ok(row)
    })?;
    Ok(())
}

fn regsum<F: Field>(h: &BigradedIdeal<F>, g: &P<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    let spec = h.spec();
    let hf = single_form(h, "regsum")?;
    let degg = g.homogeneous_degree().ok_or_else(|| Error::HypothesisViolated("g must be a nonzero form of S0".into()))? as i64;
    let product = BigradedIdeal::new(spec, vec![spec.s().mul(&spec.lift(g), &hf)])?;
    report.notes.push(format!("g = {}, h = {}", spec.s0().format(g), spec.s().format(&hf)));
    report.rows = par_rows(js, |j| {
        let (mut row, _) = top_row(&product, j);
        let (rhs, _) = measure(&top_component_presentation(h, j).presentation);
        if let Some(r) = rhs {
            row.predicted = Some(r + degg);
            row.pass = Some(row.reg == Some(r + degg));
        }
        Ok(row)
    })?;
    Ok(())
}

fn monomial<F: Field>(ideal: &BigradedIdeal<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    if let Err(Error::NotMonomial(i)) = ideal.monomial_parts() {
        return Err(Error::HypothesisViolated(format!("generator {} is not a monomial", i + 1)));
    }
    report.rows = par_rows(js, |j| {
        let (mut row, top) = top_row(ideal, j);
        let predicted = monomial_top_module(ideal, j)?;
        if !predicted.is_zero() {
            let want = minimal_resolution(&predicted).betti_table();
            row.predicted = want.regularity();
            row.pass = Some(minimal_resolution(&top).betti_table() == want);
        }
        Ok(row)
    })?;
    Ok(())
}

/// Adds the least-squares fit of `value` against `-j` and its upper envelope to the notes.
fn fit_note(report: &mut SweepReport, label: &str, points: &[(i64, i64)]) -> Option<LinearFit> {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(j, v)| (-j as f64, v as f64)).collect();
    let fit = LinearFit::least_squares(&pts)?;
    report.notes.push(format!("{label} fit vs -j: {fit}"));
    let env = fit.upper_envelope();
    report.notes.push(format!("{label} bound: {:.4}*(-j) + {:.4}", env.slope, env.intercept));
    Some(env)
}

fn annihilate<F: Field>(ideal: &BigradedIdeal<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    report.rows = par_rows(js, |j| {
        let (mut row, _) = top_row(ideal, j);
        row.ann_exp = Some(annihilation_exponent(ideal, j, default_cap(ideal, j))?);
        Ok(row)
    })?;
    let pts: Vec<(i64, i64)> = report.rows.iter().map(|r| (r.j, r.ann_exp.unwrap() as i64)).collect();
    fit_note(report, "annihilation exponent", &pts);
    Ok(())
}

fn primary<F: Field>(ideal: &BigradedIdeal<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    let content = ideal.content_ideal();
    if content.krull_dimension() > 0 {
        return Err(Error::HypothesisViolated(format!("S0/c(I) has dimension {}, not 0", content.krull_dimension())));
    }
    let k = content.maximal_power_contained().expect("m0-primary content ideal contains a power of m0") as i64;
    report.notes.push(format!("m0^{k} is contained in c(I); predicted column holds the bound k*t(j) - 1"));
    report.rows = par_rows(js, |j| {
        let (mut row, _) = top_row(ideal, j);
        let t = annihilation_exponent(ideal, j, default_cap(ideal, j))?;
        row.ann_exp = Some(t);
        if let Some(r) = row.reg {
            let bound = k * t as i64 - 1;
            row.predicted = Some(bound);
            row.pass = Some(0 <= r && r <= bound);
        }
        Ok(row)
    })?;
    Ok(())
}

fn dim<F: Field>(ideal: &BigradedIdeal<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    let want = ideal.content_ideal().krull_dimension();
    report.rows = par_rows(js, |j| {
        let (mut row, _) = top_row(ideal, j);
        if row.reg.is_some() {
            row.predicted = Some(want);
            row.pass = Some(row.dim == want);
        }
        Ok(row)
    })?;
    Ok(())
}

fn bh<F: Field>(ideal: &BigradedIdeal<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    if let Err(Error::NotMonomial(i)) = ideal.monomial_parts() {
        return Err(Error::HypothesisViolated(format!("generator {} is not a monomial", i + 1)));
    }
    report.notes.push("predicted column holds |lcm of first shifts| - 1, an upper bound for reg".into());
    report.rows = par_rows(js, |j| {
        let p = monomial_top_multigraded(ideal, j)?;
        let mut row = SweepRow::new(ideal.spec().n(), j);
        (row.reg, row.dim) = measure(&p);
        if let Some(r) = row.reg {
            let shifts = multigraded_shifts(&p)?;
            let lcm: i64 = match shifts.get(1) {
                Some(first) if !first.is_empty() => (0..first[0].len()).map(|k| first.iter().map(|a| a[k]).max().unwrap()).sum(),
                _ => 1,
            };
            let bound = (lcm - 1).max(0);
            row.predicted = Some(bound);
            row.pass = Some(check_lcm_bound(&shifts) && r <= bound);
        }
        Ok(row)
    })?;
    Ok(())
}

fn bounded<F: Field>(ideal: &BigradedIdeal<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    let spec = ideal.spec();
    let n = spec.n();
    let res = bigraded_resolution(&ideal.quotient_module(), spec.m() + n)?;
    let bound = if ideal.is_monomial() { Some(x_shift_bound(ideal)?) } else { None };
    match bound {
        Some(c) => report.notes.push(format!("bound from x-shifts of the resolution: c = {c}")),
        None => report.notes.push("not monomial: values recorded, not asserted".into()),
    }
    let cells: Vec<(usize, i64)> = (0..=n).flat_map(|s| js.iter().map(move |&j| (s, j))).collect();
    report.rows = cells
        .par_iter()
        .map(|&(s, j)| {
            let comp = res.component(s, j)?;
            let mut row = SweepRow::new(s, j);
            (row.reg, row.dim) = measure(&comp.presentation);
            if let (Some(c), Some(r)) = (bound, row.reg) {
                row.predicted = Some(c);
                row.pass = Some(r.abs() <= c);
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let max_abs = |k: usize| report.rows.iter().filter(|r| js[..k.min(js.len())].contains(&r.j)).filter_map(|r| r.reg).map(i64::abs).max();
    let (short, full) = (max_abs(3), max_abs(js.len()));
    report.notes.push(format!("max |reg| over the first 3 j: {}, over all {} j: {}", fmt_opt(short), js.len(), fmt_opt(full)));
    for s in 0..=n {
        let pts: Vec<(i64, i64)> = report.rows.iter().filter(|r| r.s == s).filter_map(|r| r.reg.map(|v| (r.j, v))).collect();
        fit_note(report, &format!("reg H^{s}"), &pts);
    }
    Ok(())
}

fn top<F: Field>(ideal: &BigradedIdeal<F>, js: &[i64], report: &mut SweepReport) -> Result<()> {
    let spec = ideal.spec();
    let n = spec.n();
    single_form(ideal, "top")?;
    let d = ideal.content_ideal().krull_dimension();
    if d > 1 {
        report.notes.push(format!("dim S0/c(f) = {d} > 1: exploratory run"));
    }
    let res = bigraded_resolution(&ideal.quotient_module(), spec.m() + n)?;
    let cells: Vec<(usize, i64)> = (n.saturating_sub(1)..=n).flat_map(|s| js.iter().map(move |&j| (s, j))).collect();
    report.rows = cells
        .par_iter()
        .map(|&(s, j)| {
            let mut row = SweepRow::new(s, j);
            (row.reg, row.dim) = measure(&res.component(s, j)?.presentation);
            Ok(row)
        })
        .collect::<Result<_>>()?;
    for s in n.saturating_sub(1)..=n {
        let pts: Vec<(i64, i64)> = report.rows.iter().filter(|r| r.s == s).filter_map(|r| r.reg.map(|v| (r.j, v))).collect();
        fit_note(report, &format!("reg H^{s}"), &pts);
    }
    Ok(())
}

fn fmt_opt(v: Option<i64>) -> String {
    v.map_or_else(|| "none".into(), |x| x.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::RingSpec;

    fn ideal(m: usize, n: usize, gens: &[&str]) -> BigradedIdeal<PrimeField> {
        BigradedIdeal::parse(&RingSpec::new(m, n, PrimeField::default()), gens).unwrap()
    }

    #[test]
    fn regular_sweep() {
        let i = ideal(2, 2, &["x1*y1 + x2*y2"]);
        let js: Vec<i64> = (-8..=-2).rev().collect();
        let r = verify(Theorem::Regular, &i, &js, None).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.rows.iter().map(|r| r.reg.unwrap()).collect::<Vec<_>>(), (0..7).collect::<Vec<_>>());
        let bad = ideal(2, 2, &["x1*y1 + x1*y2"]);
        assert!(matches!(verify(Theorem::Regular, &bad, &js, None), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn hypotheses_are_checked() {
        let i = ideal(2, 2, &["x1*y1 + x2*y2"]);
        assert!(matches!(verify(Theorem::Monomial, &i, &[-2], None), Err(Error::HypothesisViolated(_))));
        let i = ideal(3, 2, &["x1*y1 + x2*y2"]);
        assert!(matches!(verify(Theorem::Primary, &i, &[-2], None), Err(Error::HypothesisViolated(_))));
        let i = ideal(2, 3, &["x1*y1 + x2*y2"]);
        assert!(matches!(verify(Theorem::Twosummands, &i, &[-2], None), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn bound_reports() {
        let i = ideal(2, 2, &["x1*y1", "x2*y2"]);
        let js: Vec<i64> = (-6..=-2).rev().collect();
        for t in [Theorem::Monomial, Theorem::Bh, Theorem::Bounded, Theorem::Dim, Theorem::Primary] {
            assert!(verify(t, &i, &js, None).unwrap().all_pass(), "{t:?}");
        }
        let r = verify(Theorem::Annihilate, &ideal(2, 2, &["x1*y1 + x2*y2"]), &js, None).unwrap();
        assert_eq!(r.rows.iter().map(|r| r.ann_exp.unwrap()).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
        assert!(r.notes.iter().any(|n| n.contains("slope 1.0000")));
    }
}
