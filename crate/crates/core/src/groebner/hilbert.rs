//! Hilbert series of quotients by monomial modules, via the pivot recursion
//! `N(L) = N(L + (p)) + t^deg(p) N(L : p)`.

use std::fmt;

use crate::poly::Monomial;

/// A Laurent polynomial with integer coefficients: `coeffs[k]` multiplies `t^(low + k)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn monomial(exp: i64, c: i64) -> Self {
        Laurent { low: exp, coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<i64>) -> Self {
        Laurent { low, coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead_zeros);
        self.low += lead_zeros as i64;
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        let k = e - self.low;
        if k < 0 {
            0
        } else {
            self.coeffs.get(k as usize).copied().unwrap_or(0)
        }
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> Vec<(i64, i64)> {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (self.low + k as i64, c)).collect()
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.coeffs.len() as i64).max(o.low + o.coeffs.len() as i64);
        let coeffs = (low..high).map(|e| self.coeff(e) + o.coeff(e)).collect();
        Laurent::from_coeffs(low, coeffs)
    }

    pub fn neg(&self) -> Laurent {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::from_coeffs(self.low + o.low, coeffs)
    }

    pub fn shift(&self, by: i64) -> Laurent {
        if self.is_zero() {
            return self.clone();
        }
        Laurent { low: self.low + by, coeffs: self.coeffs.clone() }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Laurent {
        let base = Laurent::from_coeffs(0, vec![1, -1]);
        (0..k).fold(Laurent::monomial(0, 1), |acc, _| acc.mul(&base))
    }

    /// Exact division by `(1 - t)`; requires `eval_at_one() == 0`.
    fn div_one_minus_t(&self) -> Laurent {
        // q_k = sum_{i<=k} a_i
        let mut acc = 0;
        let mut q = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            acc += a;
            q.push(acc);
        }
        debug_assert_eq!(q.last().copied().unwrap_or(0), 0);
        q.pop();
        Laurent::from_coeffs(self.low, q)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .iter()
            .map(|&(e, c)| {
                let var = if e == 1 { "t".to_string() } else { format!("t^{e}") };
                match (e, c) {
                    (0, _) => format!("{c}"),
                    (_, 1) => var,
                    (_, -1) => format!("-{var}"),
                    _ => format!("{c}*{var}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// A Hilbert series `Q(t) / (1 - t)^d` in lowest terms: `Q(1) != 0` unless the module is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Laurent,
    denominator_exp: usize,
}

impl HilbertSeries {
    /// Reduces `numerator / (1 - t)^nvars` to lowest terms.
    pub fn from_k_polynomial(numerator: Laurent, nvars: usize) -> Self {
        let mut q = numerator;
        let mut d = nvars;
        if q.is_zero() {
            return HilbertSeries { numerator: q, denominator_exp: 0 };
        }
        while d > 0 && q.eval_at_one() == 0 {
            q = q.div_one_minus_t();
            d -= 1;
        }
        HilbertSeries { numerator: q, denominator_exp: d }
    }

    /// Series of `⊕_r R(-shift_r) / L_r` for monomial modules given componentwise.
    pub fn of_monomial_quotient(nvars: usize, parts: &[(i64, Vec<Monomial>)]) -> Self {
        let k = parts.iter().fold(Laurent::zero(), |acc, (shift, gens)| acc.add(&monomial_numerator(gens.clone()).shift(*shift)));
        Self::from_k_polynomial(k, nvars)
    }

    pub fn numerator(&self) -> &Laurent {
        &self.numerator
    }

    pub fn denominator_exp(&self) -> usize {
        self.denominator_exp
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Pole order at `t = 1`; `-1` for the zero module.
    pub fn dimension(&self) -> i64 {
        if self.is_zero() {
            -1
        } else {
            self.denominator_exp as i64
        }
    }

    /// Numerator over `(1 - t)^nvars` (the K-polynomial).
    pub fn k_polynomial(&self, nvars: usize) -> Laurent {
        assert!(nvars >= self.denominator_exp);
        self.numerator.mul(&Laurent::one_minus_t_pow(nvars - self.denominator_exp))
    }

    /// Coefficient of `t^deg` in the expanded series.
    pub fn hilbert_function(&self, deg: i64) -> i64 {
        let d = self.denominator_exp as i64;
        self.numerator
            .terms()
            .iter()
            .map(|&(e, c)| {
                let k = deg - e;
                if k < 0 {
                    0
                } else if d == 0 {
                    if k == 0 {
                        c
                    } else {
                        0
                    }
                } else {
                    c * binomial(k + d - 1, d - 1)
                }
            })
            .sum()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denominator_exp {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/(1-t)", self.numerator),
            d => write!(f, "({})/(1-t)^{d}", self.numerator),
        }
    }
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(L)` with `H(R/L) = N(L) / (1 - t)^nvars`.
pub fn monomial_numerator(gens: Vec<Monomial>) -> Laurent {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return Laurent::monomial(0, 1);
    }
    if gens.iter().any(|g| g.is_one()) {
        return Laurent::zero();
    }
    let nvars = gens[0].nvars();
    // variable shared by the most generators
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (v, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    let (v, &c) = counts.iter().enumerate().max_by_key(|&(i, c)| (*c, std::cmp::Reverse(i))).unwrap();
    if c <= 1 {
        return gens
            .iter()
            .fold(Laurent::monomial(0, 1), |acc, g| acc.mul(&Laurent::from_coeffs(0, vec![1]).sub(&Laurent::monomial(g.degree() as i64, 1))));
    }
    let e = gens.iter().map(|g| g.exponents()[v]).filter(|&e| e > 0).min().unwrap();
    let mut pe = vec![0u16; nvars];
    pe[v] = e;
    let pivot = Monomial::from_exponents(&pe);
    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&pivot)).unwrap()).collect();
    monomial_numerator(plus).add(&monomial_numerator(colon).shift(e as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn simple_quotients() {
        let h = HilbertSeries::of_monomial_quotient(2, &[(0, vec![m(&[1, 0])])]);
        assert_eq!(h.denominator_exp(), 1);
        assert_eq!(h.numerator(), &Laurent::monomial(0, 1));
        let h = HilbertSeries::of_monomial_quotient(2, &[(0, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])])]);
        assert_eq!(h.dimension(), 0);
        assert_eq!(h.numerator(), &Laurent::from_coeffs(0, vec![1, 2]));
        let h = HilbertSeries::of_monomial_quotient(3, &[(0, vec![])]);
        assert_eq!(h.dimension(), 3);
        let h = HilbertSeries::of_monomial_quotient(2, &[(0, vec![m(&[0, 0])])]);
        assert_eq!(h.dimension(), -1);
    }

    #[test]
    fn hilbert_function_of_polynomial_ring() {
        let h = HilbertSeries::of_monomial_quotient(3, &[(0, vec![])]);
        assert_eq!((0..5).map(|d| h.hilbert_function(d)).collect::<Vec<_>>(), vec![1, 3, 6, 10, 15]);
        assert_eq!(h.hilbert_function(-1), 0);
    }

    #[test]
    fn pivot_recursion_matches_counting() {
        // (x^2 y, x y^3, y^2 z, x z^2) in three variables, counted directly
        let gens = vec![m(&[2, 1, 0]), m(&[1, 3, 0]), m(&[0, 2, 1]), m(&[1, 0, 2])];
        let h = HilbertSeries::of_monomial_quotient(3, &[(0, gens.clone())]);
        for d in 0..9u32 {
            let count = crate::poly::monomials_of_degree(3, d).iter().filter(|mono| !gens.iter().any(|g| g.divides(mono))).count();
            assert_eq!(h.hilbert_function(d as i64), count as i64, "degree {d}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(1, 1), 1);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(2, 3), 0);
    }
}
