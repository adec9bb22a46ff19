use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{common_denominator, Scalar};

/// Dense univariate polynomial, coefficients stored lowest degree first with
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::new(vec![S::zero(), S::one()])
    }

    /// `x - r`
    pub fn linear_root(r: S) -> Self {
        Self::new(vec![-r, S::one()])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::of_u32(i as u32))
                .collect(),
        )
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Self::new(self.coeffs.iter().map(|a| a.clone() / l.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Euclidean division; meaningful for field coefficients.
    ///
    /// # Panics
    /// On division by the zero polynomial.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        let n = r.len();
        if n <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![S::zero(); n - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// `Some(q)` when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` modulo `m`, when the two are coprime.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        // invariant: s * self ≡ a (mod m)
        let (mut a, mut b) = (self.rem(m), m.clone());
        let (mut s, mut t) = (Self::one(), Self::zero());
        while !b.is_zero() {
            let (q, r) = a.div_rem(&b);
            let next = &s - &(&q * &t);
            a = b;
            b = r;
            s = t;
            t = next;
        }
        if a.degree() != Some(0) {
            return None;
        }
        let c = a.leading();
        Some(s.scale(&(S::one() / c)).rem(m))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            out.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let mut parts = Vec::new();
            if i == 0 || !abs.is_one() {
                parts.push(abs.to_string());
            }
            match i {
                0 => {}
                1 => parts.push(var.to_string()),
                _ => parts.push(format!("{var}^{i}")),
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

impl<S: Scalar> fmt::Display for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("z"))
    }
}

impl<S: Scalar> fmt::Debug for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl<S: Scalar> Add for &UniPoly<S> {
    type Output = UniPoly<S>;
    fn add(self, rhs: &UniPoly<S>) -> UniPoly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<S: Scalar> Sub for &UniPoly<S> {
    type Output = UniPoly<S>;
    fn sub(self, rhs: &UniPoly<S>) -> UniPoly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<S: Scalar> Mul for &UniPoly<S> {
    type Output = UniPoly<S>;
    fn mul(self, rhs: &UniPoly<S>) -> UniPoly<S> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<S: Scalar> Neg for &UniPoly<S> {
    type Output = UniPoly<S>;
    fn neg(self) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Half-open isolating interval `(lo, hi]` containing exactly one real root,
/// or the exact root when `lo == hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealRootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RealRootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }
}

type Rational = BigRational;

impl UniPoly<Rational> {
    /// Integer coefficients with content 1 and positive leading coefficient,
    /// spanning the same ideal.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &content * &sign).collect()
    }

    pub fn from_integers(cs: &[BigInt]) -> Self {
        Self::new(cs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Yun's square-free decomposition: monic `(factor, multiplicity)` pairs
    /// with pairwise coprime square-free factors whose product (with
    /// multiplicities) is `self` up to a constant.
    pub fn square_free_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.exact_div(&a).expect("gcd divides");
            let nc = d.exact_div(&a).expect("gcd divides");
            d = &nc - &nb.derivative();
            b = nb;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    pub fn square_free_part(&self) -> Self {
        self.square_free_decomposition().iter().fold(Self::one(), |acc, (f, _)| &acc * f)
    }

    fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        seq
    }

    fn sign_changes(seq: &[Self], x: &Rational) -> usize {
        let signs: Vec<bool> = seq
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Cauchy bound: every complex root has absolute value below it.
    pub fn root_bound(&self) -> Rational {
        let l = self.leading().abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / l.clone())
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });
        m + Rational::one()
    }

    /// Isolating intervals for the distinct real roots, in increasing order.
    pub fn real_root_intervals(&self) -> Vec<RealRootInterval> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let p = self.square_free_part();
        let seq = p.sturm_sequence();
        let b = p.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = Self::sign_changes(&seq, &lo) - Self::sign_changes(&seq, &hi);
            match n {
                0 => {}
                1 => {
                    if p.eval(&hi).is_zero() {
                        out.push(RealRootInterval { lo: hi.clone(), hi });
                    } else {
                        out.push(RealRootInterval { lo, hi });
                    }
                }
                _ => {
                    let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }

    /// Shrinks an isolating interval of this (square-free) polynomial below
    /// `width`.
    pub fn refine(&self, iv: &RealRootInterval, width: &Rational) -> RealRootInterval {
        let mut iv = iv.clone();
        let two = Rational::from_integer(BigInt::from(2));
        while !iv.is_exact() && &(&iv.hi - &iv.lo) >= width {
            let mid = (&iv.lo + &iv.hi) / &two;
            let vm = self.eval(&mid);
            if vm.is_zero() {
                return RealRootInterval { lo: mid.clone(), hi: mid };
            }
            // the root is in (lo, mid) iff the sign at mid matches the sign at hi
            let vh = self.eval(&iv.hi);
            if vh.is_zero() || vm.is_positive() == vh.is_positive() {
                iv.hi = mid;
            } else {
                iv.lo = mid;
            }
        }
        iv
    }

    /// All rational roots, each listed once, in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let p = self.square_free_part();
        let prim = p.primitive_integer();
        let lead = BigRational::from_integer(prim.last().unwrap().clone());
        // two fractions with denominators dividing `lead` are at least 1/lead^2 apart
        let width = Rational::one() / (&lead * &lead * Rational::from_integer(BigInt::from(2)));
        let mut out = Vec::new();
        for iv in p.real_root_intervals() {
            let iv = p.refine(&iv, &width);
            let candidate = if iv.is_exact() { iv.hi.clone() } else { simplest_between(&iv.lo, &iv.hi) };
            if p.eval(&candidate).is_zero() {
                out.push(candidate);
            }
        }
        out
    }

    /// Looks for a monic quadratic factor with rational coefficients by
    /// Kronecker's interpolation method. Gives up (returns `None`) when the
    /// candidate space is larger than `budget`.
    pub fn quadratic_factor(&self, budget: usize) -> Option<Self> {
        let deg = self.degree()?;
        if deg < 4 {
            return None;
        }
        let prim = Self::from_integers(&self.primitive_integer());
        let mut samples: Vec<(i64, BigInt)> = (-6i64..=6)
            .map(|k| (k, prim.eval(&Rational::from_integer(BigInt::from(k))).to_integer()))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        samples.sort_by_key(|(_, v)| v.abs());
        if samples.len() < 3 {
            return None;
        }
        let samples = &samples[..3];
        let divs: Vec<Vec<BigInt>> = samples.iter().map(|(_, v)| divisors(&v.abs(), budget)).collect::<Option<_>>()?;
        let total = divs.iter().map(|d| d.len() * 2).product::<usize>() / 2;
        if total > budget {
            return None;
        }
        let xs: Vec<Rational> = samples.iter().map(|(k, _)| Rational::from_integer(BigInt::from(*k))).collect();
        for d0 in &divs[0] {
            for d1 in divs[1].iter().flat_map(|d| [d.clone(), -d.clone()]) {
                for d2 in divs[2].iter().flat_map(|d| [d.clone(), -d.clone()]) {
                    let ys = [Rational::from_integer(d0.clone()), Rational::from_integer(d1.clone()), Rational::from_integer(d2)];
                    let q = interpolate(&xs, &ys);
                    if q.degree() != Some(2) {
                        continue;
                    }
                    if q.coeffs.iter().any(|c| !c.is_integer()) {
                        continue;
                    }
                    if prim.exact_div(&q).is_some() {
                        return Some(q.monic());
                    }
                }
            }
        }
        None
    }

    /// Factorization into monic irreducible factors with multiplicities, for
    /// polynomials of degree at most 5. Factors of degree 4 or 5 that may
    /// still split are split when the quadratic search stays within budget.
    pub fn factor_small(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        for (f, m) in self.square_free_decomposition() {
            let mut rest = f.clone();
            for r in f.rational_roots() {
                out.push((Self::linear_root(r.clone()), m));
                rest = rest.exact_div(&Self::linear_root(r)).expect("root divides");
            }
            while rest.degree().unwrap_or(0) >= 4 {
                match rest.quadratic_factor(200_000) {
                    Some(q) => {
                        rest = rest.exact_div(&q).expect("factor divides").monic();
                        out.push((q, m));
                    }
                    None => break,
                }
            }
            if rest.degree().unwrap_or(0) > 0 {
                out.push((rest.monic(), m));
            }
        }
        out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| cmp_coeffs(&a.0, &b.0)));
        out
    }

    /// Real roots as floating point numbers, each located to within `tol`.
    pub fn approximate_real_roots(&self, tol: f64) -> Vec<f64> {
        let p = self.square_free_part();
        let width = Rational::from_float(tol).unwrap_or_else(|| Rational::new(BigInt::one(), BigInt::from(1_000_000_000u64)));
        p.real_root_intervals()
            .iter()
            .map(|iv| p.refine(iv, &width).midpoint().to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

fn cmp_coeffs(a: &UniPoly<Rational>, b: &UniPoly<Rational>) -> std::cmp::Ordering {
    a.coeffs.iter().rev().cmp(b.coeffs.iter().rev())
}

fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly<Rational> {
    let mut out = UniPoly::zero();
    for i in 0..xs.len() {
        let mut basis = UniPoly::constant(ys[i].clone());
        for j in 0..xs.len() {
            if i != j {
                let denom = &xs[i] - &xs[j];
                basis = &basis * &UniPoly::new(vec![-xs[j].clone() / denom.clone(), Rational::one() / denom]);
            }
        }
        out = &out + &basis;
    }
    out
}

/// Positive divisors of `n`, or `None` if trial division would need more than
/// `budget` steps.
fn divisors(n: &BigInt, budget: usize) -> Option<Vec<BigInt>> {
    let limit = n.sqrt();
    if limit > BigInt::from(budget) {
        return None;
    }
    let limit = limit.to_u64().unwrap_or(0);
    let mut small = Vec::new();
    let mut large = Vec::new();
    for d in 1..=limit {
        let d = BigInt::from(d);
        if (n % &d).is_zero() {
            let q = n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d);
        }
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// The fraction with the smallest denominator in the closed interval
/// `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    let c = lo.ceil();
    if &c <= hi {
        if lo.is_positive() {
            return c;
        }
        if hi.is_negative() {
            return hi.floor();
        }
        return Rational::zero();
    }
    let n = lo.floor();
    let inner = simplest_between(&(Rational::one() / (hi - &n)), &(Rational::one() / (lo - &n)));
    n + Rational::one() / inner
}
