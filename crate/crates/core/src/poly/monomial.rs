use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// An exponent vector. The number of variables is implied by the length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree restricted to the variables in `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Splits at `at` into the leading and trailing blocks of variables.
    pub fn split(&self, at: usize) -> (Monomial, Monomial) {
        (Monomial(SmallVec::from_slice(&self.0[..at])), Monomial(SmallVec::from_slice(&self.0[at..])))
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    /// Drops variable `i` (sets its exponent to zero).
    pub fn without(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] = 0;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// All monomials in `nvars` variables of total degree `deg`, lexicographically descending
/// (so `x1^deg` comes first).
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if n == 0 {
            if left == 0 {
                out.push(Monomial::from_exponents(cur));
            }
            return;
        }
        if i == n - 1 {
            cur[i] = left as u16;
            out.push(Monomial::from_exponents(cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, deg, &mut cur, &mut out);
    out
}

/// Monomial orders. Both variants are refined by total degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x_1 > x_2 > ...`.
    GrevLex,
    /// Total degree, then degree in the first `split` variables, then grevlex on the
    /// first block, then grevlex on the second block.
    BlockGrevLex { split: usize },
}

fn grevlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        let c = a.degree().cmp(&b.degree());
        if c != Ordering::Equal {
            return c;
        }
        match *self {
            MonomialOrder::GrevLex => grevlex_tail(ea, eb),
            MonomialOrder::BlockGrevLex { split } => {
                let split = split.min(ea.len());
                let da: u32 = ea[..split].iter().map(|&e| e as u32).sum();
                let db: u32 = eb[..split].iter().map(|&e| e as u32).sum();
                da.cmp(&db).then_with(|| grevlex_tail(&ea[..split], &eb[..split])).then_with(|| grevlex_tail(&ea[split..], &eb[split..]))
            }
        }
    }
}
