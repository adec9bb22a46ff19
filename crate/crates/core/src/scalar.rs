//! Coefficient types.
//!
//! Everything in the polynomial and matrix layers is generic over [`Scalar`],
//! which is satisfied by `f32`, `f64`, [`BigInt`] and [`BigRational`]. The
//! geometric layers work over [`Rational`](crate::Rational) exclusively.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn of_u32(n: u32) -> Self {
        <Self as FromPrimitive>::from_u32(n).expect("every scalar type holds small integers")
    }

    fn of_i64(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("every scalar type holds small integers")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `n`, `-n`, `+n` or `n/d`. Surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = |message: &str| Error::Parse { position: 0, message: format!("{message}: `{s}`") };
    if t.is_empty() {
        return Err(bad("empty rational literal"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let parse_int = |x: &str, signed: bool| -> Result<BigInt> {
        let digits = if signed { x.strip_prefix(['-', '+']).unwrap_or(x) } else { x };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("malformed rational literal"));
        }
        x.parse::<BigInt>().map_err(|_| bad("malformed rational literal"))
    };
    let n = parse_int(num, true)?;
    let d = match den {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(n, d))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

pub fn is_rational_square(q: &BigRational) -> bool {
    rational_sqrt(q).is_some()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
