//! The biquadratic algebra `Q[r_m, r_p] / (r_m² − (t − 2), r_p² − (t + 2))`.
//!
//! Elements are stored over the basis `1, r_m, r_p, r_m·r_p`. The algebra is
//! a field exactly when none of `t − 2`, `t + 2`, `(t − 2)(t + 2)` is a
//! rational square; otherwise [`SqrtElem::normalize`] folds the rational
//! relations in, using the principal square roots, so that
//! [`SqrtElem::vanishes`] decides equality of complex values for every `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, rational_sqrt};
use crate::Rational;

/// The algebra attached to a fiber value `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtAlgebra {
    t: Rational,
}

impl SqrtAlgebra {
    pub fn new(t: Rational) -> Self {
        SqrtAlgebra { t }
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn elem(&self, coords: [Rational; 4]) -> SqrtElem {
        SqrtElem { t: self.t.clone(), c: coords }
    }

    pub fn rational(&self, q: Rational) -> SqrtElem {
        self.elem([q, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn zero(&self) -> SqrtElem {
        self.rational(Rational::zero())
    }

    pub fn one(&self) -> SqrtElem {
        self.rational(Rational::one())
    }

    /// `r_m`, a square root of `t − 2`.
    pub fn r_minus(&self) -> SqrtElem {
        self.elem([Rational::zero(), Rational::one(), Rational::zero(), Rational::zero()])
    }

    /// `r_p`, a square root of `t + 2`.
    pub fn r_plus(&self) -> SqrtElem {
        self.elem([Rational::zero(), Rational::zero(), Rational::one(), Rational::zero()])
    }

    /// Rational values of `(r_m, r_p)` when both `t ∓ 2` are squares.
    pub fn instantiation(&self) -> Option<(Rational, Rational)> {
        Some((rational_sqrt(&(&self.t - int(2)))?, rational_sqrt(&(&self.t + int(2)))?))
    }

    pub fn is_field(&self) -> bool {
        let m = &self.t - int(2);
        let p = &self.t + int(2);
        !is_square(&m) && !is_square(&p) && !is_square(&(&m * &p))
    }
}

fn is_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}

#[derive(Clone, PartialEq, Eq)]
pub struct SqrtElem {
    t: Rational,
    c: [Rational; 4],
}

impl SqrtElem {
    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    /// All four coordinates are zero.
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &SqrtElem) -> Result<()> {
        if self.t != other.t {
            return Err(Error::Dimension(format!("square-root algebras at t = {} and t = {}", self.t, other.t)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SqrtElem) -> Result<SqrtElem> {
        self.check(other)?;
        Ok(SqrtElem { t: self.t.clone(), c: std::array::from_fn(|i| &self.c[i] + &other.c[i]) })
    }

    pub fn try_sub(&self, other: &SqrtElem) -> Result<SqrtElem> {
        self.check(other)?;
        Ok(SqrtElem { t: self.t.clone(), c: std::array::from_fn(|i| &self.c[i] - &other.c[i]) })
    }

    pub fn try_mul(&self, other: &SqrtElem) -> Result<SqrtElem> {
        self.check(other)?;
        let m = &self.t - int(2);
        let p = &self.t + int(2);
        let [c0, c1, c2, c3] = &self.c;
        let [d0, d1, d2, d3] = &other.c;
        let e0 = c0 * d0 + &m * c1 * d1 + &p * c2 * d2 + &m * &p * c3 * d3;
        let e1 = c0 * d1 + c1 * d0 + &p * (c2 * d3 + c3 * d2);
        let e2 = c0 * d2 + c2 * d0 + &m * (c1 * d3 + c3 * d1);
        let e3 = c0 * d3 + c3 * d0 + c1 * d2 + c2 * d1;
        Ok(SqrtElem { t: self.t.clone(), c: [e0, e1, e2, e3] })
    }

    pub fn scale(&self, q: &Rational) -> SqrtElem {
        SqrtElem { t: self.t.clone(), c: std::array::from_fn(|i| &self.c[i] * q) }
    }

    /// `r_p ↦ −r_p`.
    fn conj_plus(&self) -> SqrtElem {
        let [c0, c1, c2, c3] = self.c.clone();
        SqrtElem { t: self.t.clone(), c: [c0, c1, -c2, -c3] }
    }

    /// `r_m ↦ −r_m`.
    fn conj_minus(&self) -> SqrtElem {
        let [c0, c1, c2, c3] = self.c.clone();
        SqrtElem { t: self.t.clone(), c: [c0, -c1, c2, -c3] }
    }

    /// Product of the four conjugates; zero exactly for zero divisors.
    pub fn norm(&self) -> Rational {
        let a = self * &self.conj_plus();
        let n = &a * &a.conj_minus();
        n.c[0].clone()
    }

    pub fn inv(&self) -> Result<SqrtElem> {
        let a = self.conj_plus();
        let b = &(self * &a).conj_minus();
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ZeroDivisor(self.t.to_string()));
        }
        Ok((&a * b).scale(&n.recip()))
    }

    /// Rewrites the element using whichever of `t − 2`, `t + 2`,
    /// `(t − 2)(t + 2)` is a rational square, so that the result is zero
    /// exactly when the complex value (principal roots) is zero.
    pub fn normalize(&self) -> SqrtElem {
        let m = &self.t - int(2);
        let p = &self.t + int(2);
        let [c0, c1, c2, c3] = &self.c;
        let z = Rational::zero;
        let c = match (rational_sqrt(&m), rational_sqrt(&p)) {
            (Some(a), Some(b)) => [c0 + c1 * &a + (c2 + c3 * &a) * &b, z(), z(), z()],
            (Some(a), None) => [c0 + c1 * &a, z(), c2 + c3 * &a, z()],
            (None, Some(b)) => [c0 + c2 * &b, c1 + c3 * &b, z(), z()],
            (None, None) => match rational_sqrt(&(&m * &p)) {
                Some(s) => {
                    // t > 2: both roots real and positive; t < −2: both are
                    // i times a positive real, so the product is negative
                    let s = if self.t.is_positive() { s } else { -s };
                    [c0 + c3 * &s, c1 + c2 * &s / &m, z(), z()]
                }
                None => self.c.clone(),
            },
        };
        SqrtElem { t: self.t.clone(), c }
    }

    /// The complex value under the principal square roots is zero.
    pub fn vanishes(&self) -> bool {
        self.normalize().is_zero()
    }

    /// The value as a rational number, when it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        let n = self.normalize();
        n.c[1..].iter().all(Zero::is_zero).then(|| n.c[0].clone())
    }

    pub fn to_f64(&self) -> Option<f64> {
        use crate::scalar::to_f64;
        let m = to_f64(&(&self.t - int(2)));
        let p = to_f64(&(&self.t + int(2)));
        if m < 0.0 || p < 0.0 {
            return None;
        }
        let (a, b) = (m.sqrt(), p.sqrt());
        let [c0, c1, c2, c3] = self.c.each_ref().map(to_f64);
        Some(c0 + c1 * a + c2 * b + c3 * a * b)
    }
}

impl<'a> Add<&'a SqrtElem> for &'a SqrtElem {
    type Output = SqrtElem;
    fn add(self, rhs: &SqrtElem) -> SqrtElem {
        self.try_add(rhs).expect("elements of the same algebra")
    }
}

impl<'a> Sub<&'a SqrtElem> for &'a SqrtElem {
    type Output = SqrtElem;
    fn sub(self, rhs: &SqrtElem) -> SqrtElem {
        self.try_sub(rhs).expect("elements of the same algebra")
    }
}

impl<'a> Mul<&'a SqrtElem> for &'a SqrtElem {
    type Output = SqrtElem;
    fn mul(self, rhs: &SqrtElem) -> SqrtElem {
        self.try_mul(rhs).expect("elements of the same algebra")
    }
}

impl Neg for &SqrtElem {
    type Output = SqrtElem;
    fn neg(self) -> SqrtElem {
        self.scale(&int(-1))
    }
}

impl fmt::Display for SqrtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "r_m", "r_p", "r_m*r_p"];
        let mut out = String::new();
        for (c, name) in self.c.iter().zip(NAMES) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (name.is_empty(), a.is_one()) {
                (true, _) => out.push_str(&a.to_string()),
                (false, true) => out.push_str(name),
                (false, false) => out.push_str(&format!("{a}*{name}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for SqrtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SqrtElem(t = {}: {self})", self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn relation_at_three() {
        let k = SqrtAlgebra::new(int(3));
        let r = k.r_minus();
        assert_eq!(&r * &r, k.one());
    }

    #[test]
    fn square_of_sum() {
        let k = SqrtAlgebra::new(rat(7, 3));
        let s = &k.r_minus() + &k.r_plus();
        let expected = k.elem([rat(14, 3), int(0), int(0), int(2)]);
        assert_eq!(&s * &s, expected);
    }

    #[test]
    fn rational_instantiation() {
        let k = SqrtAlgebra::new(rat(17, 4));
        assert_eq!(k.instantiation(), Some((rat(3, 2), rat(5, 2))));
        let prod = &k.r_minus() * &k.r_plus();
        assert_eq!(prod.as_rational(), Some(rat(15, 4)));
        assert!(!k.is_field());
    }

    #[test]
    fn inverses_in_the_field_case() {
        let k = SqrtAlgebra::new(int(5));
        assert!(k.is_field());
        let a = k.elem([int(1), int(2), int(-1), rat(1, 3)]);
        assert_eq!(&a * &a.inv().unwrap(), k.one());
    }

    #[test]
    fn zero_divisors_are_reported() {
        // at t = 11, t + 2 = 13 and t - 2 = 9 = 3^2, so r_m - 3 is a zero divisor
        let k = SqrtAlgebra::new(int(11));
        let a = &k.r_minus() - &k.rational(int(3));
        assert!(matches!(a.inv(), Err(Error::ZeroDivisor(_))));
        assert!(a.vanishes());
        assert!(!a.is_zero());
    }

    #[test]
    fn product_square_branch() {
        // t = 5/2: (t - 2)(t + 2) = 9/4 while neither factor is a square
        let k = SqrtAlgebra::new(rat(5, 2));
        let prod = &k.r_minus() * &k.r_plus();
        assert_eq!(prod.as_rational(), Some(rat(3, 2)));
        let k = SqrtAlgebra::new(rat(-5, 2));
        let prod = &k.r_minus() * &k.r_plus();
        assert_eq!(prod.as_rational(), Some(rat(-3, 2)));
    }

    #[test]
    fn display() {
        let k = SqrtAlgebra::new(int(5));
        assert_eq!(k.elem([rat(1, 2), int(-1), int(0), int(3)]).to_string(), "1/2 - r_m + 3*r_m*r_p");
        assert_eq!(k.zero().to_string(), "0");
    }
}
