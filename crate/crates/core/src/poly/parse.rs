//! Recursive-descent parser for the ASCII polynomial grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*'|'/') power)*
//! power  := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Variables are the ring's names (`x1`, `y2`, ...). Division is only allowed by a
//! nonzero constant.

use super::ring::{PolyRing, P};
use super::PolyError;
use crate::field::Field;

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    src: &'a [u8],
    pos: usize,
}

pub fn parse_poly<F: Field>(text: &str, ring: &PolyRing<F>) -> Result<P<F>, PolyError> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0 };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(f)
}

impl<F: Field> Parser<'_, F> {
    fn syntax(&self, msg: &str) -> PolyError {
        PolyError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<P<F>, PolyError> {
        let r = self.ring;
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let t = self.term()?;
                r.neg(&t)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = r.add(&acc, &t);
                }
                b'-' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = r.sub(&acc, &t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<P<F>, PolyError> {
        let r = self.ring;
        let mut acc = self.power()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = r.mul(&acc, &f);
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    let c = match d.terms() {
                        [(m, c)] if m.is_one() => c.clone(),
                        [] => return Err(PolyError::NotInvertible { pos: at }),
                        _ => return Err(PolyError::Syntax { pos: at, msg: "division by a non-constant".into() }),
                    };
                    let inv = r.field().inv(&c).ok_or(PolyError::NotInvertible { pos: at })?;
                    acc = r.scale(&acc, &inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<P<F>, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.syntax("expected exponent"));
            }
            let k: u32 = digits.parse().map_err(|_| self.syntax("exponent too large"))?;
            return Ok(self.ring.pow(&base, k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<P<F>, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(self.ring.constant(self.ring.field().from_decimal(&d)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(PolyError::UnknownVariable { name, pos: start }),
                }
            }
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}
