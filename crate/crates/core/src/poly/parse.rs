//! Text parser for polynomials and polynomial maps.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' digits)?
//! atom   := rational | ident | '(' expr ')'
//! rational := digits ('/' digits)?
//! ```
//!
//! The printed form of a [`MultiPoly`] is accepted back unchanged.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{MultiPoly, PolyMap, XYZ};
use crate::error::{Error, Result};
use crate::Rational;

struct Parser<'a, V: AsRef<str>> {
    src: &'a str,
    pos: usize,
    vars: &'a [V],
    // offset of `src` inside the caller's string, for error positions
    base: usize,
}

impl<'a, V: AsRef<str>> Parser<'a, V> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.base + self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        self.pos += len;
        (len > 0).then(|| &self.src[start..start + len])
    }

    fn expr(&mut self) -> Result<MultiPoly<Rational>> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<Rational>> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly<Rational>> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly<Rational>> {
        let base = self.atom()?;
        if self.eat('^') {
            let d = self.digits().ok_or_else(|| self.err("expected exponent after `^`"))?;
            let e: u32 = d.parse().map_err(|_| self.err("exponent too large"))?;
            if e > 4096 {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly<Rational>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().unwrap().parse().expect("digits parse");
                let mut d = BigInt::one();
                if self.eat('/') {
                    let ds = self.digits().ok_or_else(|| self.err("expected denominator after `/`"))?;
                    d = ds.parse().expect("digits parse");
                    if d.is_zero() {
                        return Err(Error::ZeroDenominator);
                    }
                }
                Ok(MultiPoly::constant(self.vars, BigRational::new(n, d)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let len: usize = self.src[start..]
                    .chars()
                    .take_while(|c| c.is_alphanumeric() || *c == '_')
                    .map(char::len_utf8)
                    .sum();
                self.pos += len;
                let name = &self.src[start..start + len];
                MultiPoly::var(self.vars, name)
                    .map_err(|_| Error::UnknownVariable { name: name.to_string(), position: self.base + start })
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn parse_at<V: AsRef<str>>(src: &str, vars: &[V], base: usize) -> Result<MultiPoly<Rational>> {
    let mut p = Parser { src, pos: 0, vars, base };
    if p.peek().is_none() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.err(format!("unexpected `{c}`")));
    }
    Ok(e)
}

/// Parses a polynomial over the given variables.
pub fn parse_poly<V: AsRef<str>>(src: &str, vars: &[V]) -> Result<MultiPoly<Rational>> {
    parse_at(src, vars, 0)
}

/// Parses three `;`-separated polynomials in `x, y, z`.
pub fn parse_poly_map(src: &str) -> Result<PolyMap<Rational>> {
    let parts: Vec<&str> = src.split(';').collect();
    if parts.len() != 3 {
        return Err(Error::Parse {
            position: 0,
            message: format!("expected three `;`-separated components, found {}", parts.len()),
        });
    }
    let mut comps = Vec::with_capacity(3);
    let mut base = 0;
    for part in parts {
        comps.push(parse_at(part, &XYZ, base)?);
        base += part.len() + 1;
    }
    let [a, b, c]: [MultiPoly<Rational>; 3] = comps.try_into().expect("three components");
    PolyMap::new([a, b, c])
}
