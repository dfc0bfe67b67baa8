//! Coefficient fields: prime fields `Z/p` and the rationals.

use std::fmt;
use std::hash::Hash;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// The prime used when no field is requested explicitly.
pub const DEFAULT_PRIME: u32 = 32003;

/// A field whose elements are plain values; all arithmetic goes through the field object.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Parses a non-negative decimal integer literal.
    fn from_decimal(&self, digits: &str) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// Human-readable form; prime field elements print in the symmetric range.
    fn format(&self, a: &Self::Elem) -> String;
    /// Short description such as `GF(32003)` or `QQ`.
    fn name(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// True if the printed form needs a leading minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool {
        self.format(a).starts_with('-')
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Returns `None` unless `p` is a prime below 2^31.
    pub fn new(p: u32) -> Option<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return None;
        }
        Some(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        let r = v.rem_euclid(self.p as i64);
        r as u32
    }
    fn from_decimal(&self, digits: &str) -> u32 {
        digits.bytes().fold(0u32, |acc, b| self.reduce(acc as u64 * 10 + (b - b'0') as u64))
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 + *b as u64)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 + self.p as u64 - *b as u64)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 * *b as u64)
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Some(s0.rem_euclid(self.p as i64) as u32)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn format(&self, a: &u32) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
}

/// The field of rational numbers with arbitrary-precision numerators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_decimal(&self, digits: &str) -> BigRational {
        BigRational::from_integer(digits.parse::<BigInt>().unwrap_or_default())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        "QQ".to_string()
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(32003).is_some());
        assert!(PrimeField::new(32001).is_none());
        assert!(PrimeField::new(1).is_none());
        assert!(PrimeField::new(2).is_some());
    }

    #[test]
    fn symmetric_printing() {
        let f = PrimeField::default();
        assert_eq!(f.from_i64(-3), 32000);
        assert_eq!(f.format(&32000), "-3");
        assert_eq!(f.from_decimal("64009"), 3);
    }

    proptest! {
        #[test]
        fn prime_field_axioms(a in 0u32..32003, b in 0u32..32003, c in 0u32..32003) {
            let f = PrimeField::default();
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.add(&a, &f.neg(&a)), 0);
            if a != 0 {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }

        #[test]
        fn rational_axioms(a in -50i64..50, b in -50i64..50, c in 1i64..50) {
            let q = Rationals;
            let (a, b, c) = (q.from_i64(a), q.from_i64(b), q.inv(&q.from_i64(c)).unwrap());
            prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
            if !q.is_zero(&a) {
                prop_assert!(q.is_one(&q.mul(&a, &q.inv(&a).unwrap())));
            }
        }
    }
}
