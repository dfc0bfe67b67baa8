//! Polynomials over the bigraded ring `S = K[x1..xm, y1..yn]` and its x-subring `S0`.

mod monomial;
mod parse;
mod ring;

use std::fmt;
use std::ops::Add;

use thiserror::Error;

pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use ring::{Poly, PolyRing, P};

use crate::field::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("coefficient at byte {pos} is not invertible in the coefficient field")]
    NotInvertible { pos: usize },
    #[error("polynomial is not bihomogeneous")]
    NotBihomogeneous,
    #[error("zero polynomial has no bidegree")]
    ZeroPolynomial,
    #[error("malformed ideal file: {0}")]
    BadFile(String),
}

/// Bidegree `(a, b)`: `a` counts x-variables, `b` counts y-variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bidegree {
    pub x: i64,
    pub y: i64,
}

impl Bidegree {
    pub fn new(x: i64, y: i64) -> Self {
        Bidegree { x, y }
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.x - o.x, self.y - o.y)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The standard bigraded ring with `m` x-variables and `n` y-variables.
#[derive(Clone, Debug)]
pub struct RingSpec<F: Field> {
    m: usize,
    n: usize,
    s: PolyRing<F>,
    s0: PolyRing<F>,
}

impl<F: Field> PartialEq for RingSpec<F> {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.n == other.n && self.s.field() == other.s.field()
    }
}

impl<F: Field> RingSpec<F> {
    /// Panics unless `m >= 1` and `n >= 1`.
    pub fn new(m: usize, n: usize, field: F) -> Self {
        assert!(m >= 1 && n >= 1, "need at least one x- and one y-variable");
        let names = (1..=m).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect();
        RingSpec { m, n, s: PolyRing::new(field.clone(), names, MonomialOrder::BlockGrevLex { split: m }), s0: PolyRing::with_x_vars(field, m) }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        self.s.field()
    }

    /// The full ring `S`.
    pub fn s(&self) -> &PolyRing<F> {
        &self.s
    }

    /// The x-subring `S0`.
    pub fn s0(&self) -> &PolyRing<F> {
        &self.s0
    }

    pub fn parse(&self, text: &str) -> Result<P<F>, PolyError> {
        parse_poly(text, &self.s)
    }

    pub fn parse_s0(&self, text: &str) -> Result<P<F>, PolyError> {
        parse_poly(text, &self.s0)
    }

    pub fn monomial_bidegree(&self, mono: &Monomial) -> Bidegree {
        Bidegree::new(mono.partial_degree(0..self.m) as i64, mono.partial_degree(self.m..self.m + self.n) as i64)
    }

    pub fn bidegree_of(&self, f: &P<F>) -> Result<Bidegree, PolyError> {
        let first = f.lead_monomial().ok_or(PolyError::ZeroPolynomial)?;
        let d = self.monomial_bidegree(first);
        if f.terms().iter().all(|(mono, _)| self.monomial_bidegree(mono) == d) {
            Ok(d)
        } else {
            Err(PolyError::NotBihomogeneous)
        }
    }

    /// Embeds an element of `S0` into `S`.
    pub fn lift(&self, f: &P<F>) -> P<F> {
        let ones = Monomial::one(self.n);
        self.s0.map_into(&self.s, f, |mono| mono.concat(&ones))
    }

    /// Embeds a polynomial in the y-variables (given as an n-variable monomial) into `S`.
    pub fn y_monomial(&self, ymono: &Monomial) -> Monomial {
        Monomial::one(self.m).concat(ymono)
    }

    /// Writes a bihomogeneous `f` as `sum_beta f_beta y^beta`, returning the pairs
    /// `(y^beta, f_beta)` with `f_beta` in `S0`, sorted by `beta` descending.
    pub fn content_coefficients(&self, f: &P<F>) -> Result<Vec<(Monomial, P<F>)>, PolyError> {
        if !f.is_zero() {
            self.bidegree_of(f)?;
        }
        let mut groups: std::collections::BTreeMap<Monomial, Vec<(Monomial, F::Elem)>> = Default::default();
        for (mono, c) in f.terms() {
            let (xs, ys) = mono.split(self.m);
            groups.entry(ys).or_default().push((xs, c.clone()));
        }
        Ok(groups.into_iter().rev().map(|(ys, terms)| (ys, self.s0.from_terms(terms))).collect())
    }
}

/// An ideal file: header `ring m=<m> n=<n> p=<p>` and one generator per line.
///
/// Blank lines and lines starting with `#` are ignored. `p=0` selects the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub m: usize,
    pub n: usize,
    pub p: u32,
    pub generators: Vec<String>,
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| PolyError::BadFile("missing header".into()))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("ring") {
            return Err(PolyError::BadFile(format!("header must start with `ring`: {header}")));
        }
        let (mut m, mut n, mut p) = (None, None, None);
        for kv in fields {
            let (k, v) = kv.split_once('=').ok_or_else(|| PolyError::BadFile(format!("bad header field {kv}")))?;
            let v: u64 = v.parse().map_err(|_| PolyError::BadFile(format!("bad number in {kv}")))?;
            match k {
                "m" => m = Some(v as usize),
                "n" => n = Some(v as usize),
                "p" => p = Some(v as u32),
                _ => return Err(PolyError::BadFile(format!("unknown header field {k}"))),
            }
        }
        let (m, n) = match (m, n) {
            (Some(m), Some(n)) if m >= 1 && n >= 1 => (m, n),
            _ => return Err(PolyError::BadFile("header needs m>=1 and n>=1".into())),
        };
        Ok(IdealFile { m, n, p: p.unwrap_or(crate::field::DEFAULT_PRIME), generators: lines.map(str::to_string).collect() })
    }

    pub fn render(&self) -> String {
        let mut s = format!("ring m={} n={} p={}\n", self.m, self.n, self.p);
        for g in &self.generators {
            s.push_str(g);
            s.push('\n');
        }
        s
    }
}
