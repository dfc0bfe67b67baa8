//! Closed-form regularity predictions for special classes of ideals.

use super::component::{bigraded_resolution, induce_map, top_component_presentation, z_count};
use super::ideal::BigradedIdeal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{gcd, Ideal};
use crate::poly::{RingSpec, P};
use crate::resolution::{regularity, GradedPresentation};

/// `reg H^n_Q(S/(f))_j` for `f = Σ f_i y_i` with `f_1..f_n` a regular sequence of degree `d`.
pub fn predicted_reg_regular_sequence(d: i64, n: i64, j: i64) -> i64 {
    -d * j - n
}

/// `reg H^2_Q(S/(f))_j` for `f = f_1 y_1 + f_2 y_2` of bidegree `(d, 1)` with `deg gcd(f_1, f_2) = degg`.
pub fn predicted_reg_two_summands(d: i64, degg: i64, j: i64) -> i64 {
    if degg < d {
        -(d - degg) * j + degg - 2
    } else {
        degg
    }
}

/// For a monomial ideal `(u_i v_i)`: the ideal `J = (u_i)` of `S0` and the number of copies
/// of `S0 / J` making up the top component in y-degree `j`.
pub fn monomial_top_predictor<F: Field>(ideal: &BigradedIdeal<F>, j: i64) -> Result<(Ideal<F>, usize)> {
    let spec = ideal.spec();
    let parts = ideal.monomial_parts()?;
    let s0 = spec.s0();
    let gens = parts.into_iter().map(|(u, _)| s0.monomial(u)).collect();
    Ok((Ideal::new(s0, gens), z_count(j, spec.n(), 0)))
}

/// The predicted module `(S0/J)^k` as a presentation.
pub fn monomial_top_module<F: Field>(ideal: &BigradedIdeal<F>, j: i64) -> Result<GradedPresentation<F>> {
    let (jdeal, k) = monomial_top_predictor(ideal, j)?;
    Ok(GradedPresentation::monomial_cyclic(jdeal.ring(), jdeal.gens())?.power(k))
}

/// The top component of `S/I` for monomial `I`, with its `Z^m` grading attached.
///
/// Rows `z^c` sit in multidegree 0 and a column `e_i z^c` in the x-exponent of `u_i`.
pub fn monomial_top_multigraded<F: Field>(ideal: &BigradedIdeal<F>, j: i64) -> Result<GradedPresentation<F>> {
    let parts = ideal.monomial_parts()?;
    let spec = ideal.spec();
    let module = ideal.quotient_module();
    let map = induce_map(spec, module.matrix(), module.row_bidegrees(), module.col_bidegrees(), j);
    let m = spec.m();
    let rows = vec![vec![0; m]; map.rows.len()];
    let cols = map.cols.iter().map(|e| parts[e.summand.unwrap()].0.exponents().iter().map(|&x| x as i64).collect()).collect();
    GradedPresentation::new(spec.s0(), map.row_degrees(), map.matrix.clone(), map.col_degrees())?.with_multidegrees(rows, cols)
}

/// `max_i |lcm_k a_{ik}| + 2` over the x-multidegrees `a_{ik}` of the minimal resolution of `S/I`.
///
/// Every component `H^s_Q(S/I)_j` of a monomial ideal has regularity at most this value.
pub fn x_shift_bound<F: Field>(ideal: &BigradedIdeal<F>) -> Result<i64> {
    ideal.monomial_parts()?;
    let spec = ideal.spec();
    let m = spec.m();
    let res = bigraded_resolution(&ideal.quotient_module(), m + spec.n())?;
    let degs = res.resolution().propagate_degrees(vec![vec![0; m]], |mono| mono.exponents()[..m].iter().map(|&e| e as i64).collect())?;
    let lcm_size = |pos: &Vec<Vec<i64>>| -> i64 { (0..m).map(|k| pos.iter().map(|a| a[k]).max().unwrap_or(0)).sum() };
    Ok(degs.iter().map(lcm_size).max().unwrap_or(0) + 2)
}

/// Splits `f = f_1 y_1 + f_2 y_2` (with `n = 2`) into `(f_1, f_2)`.
pub fn two_summand_coefficients<F: Field>(spec: &RingSpec<F>, f: &P<F>) -> Result<(P<F>, P<F>)> {
    if spec.n() != 2 {
        return Err(Error::HypothesisViolated(format!("needs exactly two y-variables, got {}", spec.n())));
    }
    let b = spec.bidegree_of(f)?;
    if b.y != 1 {
        return Err(Error::HypothesisViolated(format!("bidegree {b} is not of the form (d,1)")));
    }
    let mut f1 = spec.s0().zero();
    let mut f2 = spec.s0().zero();
    for (beta, c) in spec.content_coefficients(f)? {
        if beta.exponents()[0] == 1 {
            f1 = c;
        } else {
            f2 = c;
        }
    }
    Ok((f1, f2))
}

/// `(d, deg gcd(f_1, f_2))` for a two-summand form.
pub fn two_summand_degrees<F: Field>(spec: &RingSpec<F>, f: &P<F>) -> Result<(i64, i64)> {
    let (f1, f2) = two_summand_coefficients(spec, f)?;
    let d = spec.bidegree_of(f)?.x;
    let g = gcd(spec.s0(), &f1, &f2);
    Ok((d, g.homogeneous_degree().unwrap_or(0) as i64))
}

/// Checks `reg H^n_Q(S/(g h))_j = reg H^n_Q(S/(h))_j + deg g` by computing both sides.
pub fn regsum_check<F: Field>(g: &P<F>, h: &BigradedIdeal<F>, j: i64) -> Result<bool> {
    let spec = h.spec();
    if h.len() != 1 {
        return Err(Error::InvalidArgument("h must be a single form".into()));
    }
    let degg = g.homogeneous_degree().ok_or(Error::NotHomogeneous { row: 0, col: 0 })? as i64;
    let gh = spec.s().mul(&spec.lift(g), &h.gens()[0]);
    let product = BigradedIdeal::new(spec, vec![gh])?;
    let rhs = regularity(&top_component_presentation(h, j).presentation)?;
    let lhs = regularity(&top_component_presentation(&product, j).presentation)?;
    Ok(lhs == rhs + degg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn spec() -> RingSpec<PrimeField> {
        RingSpec::new(2, 2, PrimeField::default())
    }

    #[test]
    fn closed_forms() {
        assert_eq!(predicted_reg_regular_sequence(1, 2, -2), 0);
        assert_eq!(predicted_reg_regular_sequence(1, 2, -3), 1);
        assert_eq!(predicted_reg_regular_sequence(2, 2, -3), 4);
        assert_eq!(predicted_reg_two_summands(2, 1, -3), 2);
        assert_eq!(predicted_reg_two_summands(1, 1, -5), 1);
        assert_eq!(predicted_reg_two_summands(2, 0, -2), 2);
    }

    #[test]
    fn monomial_prediction() {
        let sp = spec();
        let i = BigradedIdeal::parse(&sp, &["x1*y1", "x2*y2"]).unwrap();
        let (jd, k) = monomial_top_predictor(&i, -4).unwrap();
        assert_eq!(k, 3);
        assert!(jd.same_as(&Ideal::maximal(sp.s0())));
        let i = BigradedIdeal::parse(&sp, &["x1^2*y1*y2"]).unwrap();
        let (jd, k) = monomial_top_predictor(&i, -3).unwrap();
        assert_eq!(k, 2);
        assert_eq!(sp.s0().format(&jd.gens()[0]), "x1^2");
        let i = BigradedIdeal::parse(&sp, &["x1*y1"]).unwrap();
        let (_, k) = monomial_top_predictor(&i, -1).unwrap();
        assert_eq!(k, 0);
        assert!(monomial_top_module(&i, -1).unwrap().is_zero());
        let bad = BigradedIdeal::parse(&sp, &["x1*y1 + x2*y2"]).unwrap();
        assert!(matches!(monomial_top_predictor(&bad, -2), Err(Error::NotMonomial(0))));
    }

    #[test]
    fn multigraded_top_and_shift_bound() {
        let sp = spec();
        let i = BigradedIdeal::parse(&sp, &["x1^2*y1*y2", "x2*y1"]).unwrap();
        let p = monomial_top_multigraded(&i, -3).unwrap();
        let shifts = crate::resolution::multigraded_shifts(&p).unwrap();
        assert!(crate::resolution::check_lcm_bound(&shifts));
        assert_eq!(p.hilbert_series(), top_component_presentation(&i, -3).presentation.hilbert_series());
        // resolution 0 <- S <- S(-(2,0)) + S(-(0,1)) <- S(-(2,1)): lcm sizes 0, 3, 3
        assert_eq!(x_shift_bound(&i).unwrap(), 5);
        assert!(x_shift_bound(&bad_ideal(&sp)).is_err());
    }

    fn bad_ideal(sp: &RingSpec<PrimeField>) -> BigradedIdeal<PrimeField> {
        BigradedIdeal::parse(sp, &["x1*y1 + x2*y2"]).unwrap()
    }

    #[test]
    fn two_summand_split() {
        let sp = spec();
        let f = sp.parse("x1^2*y1 + x1*x2*y2").unwrap();
        assert_eq!(two_summand_degrees(&sp, &f).unwrap(), (2, 1));
        let f = sp.parse("x1*y1 + x1*y2").unwrap();
        assert_eq!(two_summand_degrees(&sp, &f).unwrap(), (1, 1));
        let f = sp.parse("x1*y1^2").unwrap();
        assert!(matches!(two_summand_degrees(&sp, &f), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn regsum_examples() {
        let sp = spec();
        let h = BigradedIdeal::parse(&sp, &["x1*y1 + x2*y2"]).unwrap();
        assert!(regsum_check(&sp.parse_s0("x1").unwrap(), &h, -2).unwrap());
        assert!(regsum_check(&sp.parse_s0("1").unwrap(), &h, -2).unwrap());
        assert!(regsum_check(&sp.parse_s0("x1^2").unwrap(), &h, -3).unwrap());
    }
}
