use std::any::Any;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;


use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_rational::BigRational;

/// Sparse multivariate polynomial over an ordered set of named variables.
///
/// Terms are kept in a map from exponent vectors to nonzero coefficients, so
/// two polynomials over the same variables are equal exactly when their term
/// maps are equal.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<S> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> MultiPoly<S> {
    pub fn zero<V: AsRef<str>>(vars: &[V]) -> Self {
        Self::zero_in(vars.iter().map(|v| v.as_ref().to_string()).collect())
    }

    fn zero_in(vars: Arc<[String]>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant<V: AsRef<str>>(vars: &[V], c: S) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    /// The polynomial consisting of the variable `name`.
    pub fn var<V: AsRef<str>>(vars: &[V], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let index = p.var_index(name).ok_or_else(|| Error::UnknownVariable { name: name.to_string(), position: 0 })?;
        p.add_term(Monomial::var(vars.len(), index), S::one());
        Ok(p)
    }

    /// All variables of `vars`, in order.
    pub fn vars_of<V: AsRef<str>>(vars: &[V]) -> Vec<Self> {
        let z = Self::zero(vars);
        (0..vars.len()).map(|i| z.variable(i)).collect()
    }

    pub fn from_terms<V: AsRef<str>>(vars: &[V], terms: impl IntoIterator<Item = (Vec<u32>, S)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length must match the variable count");
            p.add_term(Monomial::from_exponents(&e), c);
        }
        p
    }

    /// The `index`-th variable as a polynomial over the same variable set.
    pub fn variable(&self, index: usize) -> Self {
        let mut p = self.zero_like();
        p.add_term(Monomial::var(self.nvars(), index), S::one());
        p
    }

    pub fn zero_like(&self) -> Self {
        Self::zero_in(self.vars.clone())
    }

    pub fn constant_like(&self, c: S) -> Self {
        let mut p = self.zero_like();
        p.add_term(Monomial::one(self.nvars()), c);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn same_vars(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> S {
        self.terms.get(&Monomial::from_exponents(exps)).cloned().unwrap_or_else(S::zero)
    }

    pub fn constant_term(&self) -> S {
        self.terms.get(&Monomial::one(self.nvars())).cloned().unwrap_or_else(S::zero)
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    /// Total degree in the selected variables only.
    pub fn degree_in(&self, indices: &[usize]) -> u32 {
        self.terms
            .keys()
            .map(|m| indices.iter().map(|&i| m.exponents()[i]).sum())
            .max()
            .unwrap_or(0)
    }

    /// Homogeneous component of top total degree.
    pub fn leading_form(&self) -> Self {
        let d = self.total_degree();
        let mut p = self.zero_like();
        for (m, c) in self.terms.iter().rev().take_while(|(m, _)| m.degree() == d) {
            p.terms.insert(m.clone(), c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.same_vars(other) {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.vars.join(","), right: other.vars.join(",") })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.zero_like());
        }
        if let (Some(a), Some(b)) = (as_rational(self), as_rational(other)) {
            if let Some(p) = fast::mul_rational(a, b) {
                return Ok(from_rational(p));
            }
        }
        let mut acc: HashMap<Monomial, S> = HashMap::with_capacity((self.nterms() * other.nterms()).min(1 << 16));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca.clone() * cb.clone();
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = std::mem::replace(e.get_mut(), S::zero()) + prod;
                        *e.get_mut() = s;
                    }
                }
            }
        }
        Ok(MultiPoly { vars: self.vars.clone(), terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut out = self.constant_like(S::one());
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.nvars(), "point dimension must match the variable count");
        // power tables, one per variable, up to the largest exponent used
        let mut powers: Vec<Vec<S>> = point.iter().map(|_| vec![S::one()]).collect();
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("starts at one").clone() * point[i].clone();
                    powers[i].push(next);
                }
            }
        }
        let mut total = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t * powers[i][e as usize].clone();
                }
            }
            total = total + t;
        }
        total
    }

    /// Replaces every variable by the corresponding image. All images must
    /// share one variable set, which becomes the variable set of the result.
    pub fn substitute(&self, images: &[MultiPoly<S>]) -> Result<Self> {
        if images.len() != self.nvars() {
            return Err(Error::Dimension(format!(
                "substitution needs {} images, got {}",
                self.nvars(),
                images.len()
            )));
        }
        let Some(first) = images.first() else {
            // polynomial in no variables: a constant
            return Ok(self.clone());
        };
        for im in &images[1..] {
            first.check_vars(im)?;
        }
        let target = first.zero_like();
        // powers[i][k] = images[i]^k, filled lazily
        let mut powers: Vec<Vec<MultiPoly<S>>> = images.iter().map(|im| vec![target.constant_like(S::one()), im.clone()]).collect();
        let mut out = target.clone();
        for (m, c) in &self.terms {
            let mut term = target.constant_like(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Substitutes constants for the selected variables, keeping the
    /// variable set.
    pub fn specialize(&self, assignments: &[(usize, S)]) -> Self {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            let mut coeff = c.clone();
            for (i, v) in assignments {
                for _ in 0..exps[*i] {
                    coeff = coeff * v.clone();
                }
                exps[*i] = 0;
            }
            out.add_term(Monomial::from_exponents(&exps), coeff);
        }
        out
    }

    /// Re-expresses the polynomial over a different variable set, matching
    /// variables by name.
    pub fn embed<V: AsRef<str>>(&self, vars: &[V]) -> Result<Self> {
        let target = Self::zero(vars);
        let mut map = Vec::with_capacity(self.nvars());
        for (i, v) in self.vars.iter().enumerate() {
            match target.var_index(v) {
                Some(j) => map.push(j),
                // unused variable with no counterpart is dropped
                None if self.terms.keys().all(|m| m.exponents()[i] == 0) => map.push(usize::MAX),
                None => return Err(Error::UnknownVariable { name: v.clone(), position: 0 }),
            }
        }
        let mut out = target;
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; vars.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    exps[map[i]] += e;
                }
            }
            out.add_term(Monomial::from_exponents(&exps), c.clone());
        }
        Ok(out)
    }

    /// Partial derivative with respect to the `index`-th variable.
    pub fn partial(&self, index: usize) -> Self {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::from_exponents(&exps), c.clone() * S::of_u32(e));
        }
        out
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MultiPoly<T> {
        let mut out = MultiPoly::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

fn as_rational<S: Scalar>(p: &MultiPoly<S>) -> Option<&MultiPoly<BigRational>> {
    (p as &dyn Any).downcast_ref()
}

fn from_rational<S: Scalar>(p: MultiPoly<BigRational>) -> MultiPoly<S> {
    let boxed: Box<dyn Any> = Box::new(p);
    *boxed.downcast().expect("caller checked the scalar type")
}

/// Products of rational polynomials on packed exponent keys with integer
/// accumulators; the generic loop is orders of magnitude slower once the
/// factors have thousands of terms.
mod fast {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::{One, ToPrimitive, Zero};
    use rustc_hash::FxHashMap;

    use super::{Monomial, MultiPoly};

    struct Packed {
        keys: Vec<u64>,
        numers: Vec<BigInt>,
        denom: BigInt,
    }

    fn pack(p: &MultiPoly<BigRational>, bits: u32) -> Packed {
        let denom = p.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut keys = Vec::with_capacity(p.terms.len());
        let mut numers = Vec::with_capacity(p.terms.len());
        for (m, c) in &p.terms {
            keys.push(m.exponents().iter().fold(0u64, |k, &e| (k << bits) | u64::from(e)));
            numers.push(c.numer() * (&denom / c.denom()));
        }
        Packed { keys, numers, denom }
    }

    fn unpack(key: u64, n: usize, bits: u32) -> Monomial {
        let mask = (1u64 << bits) - 1;
        let mut e = vec![0u32; n];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = ((key >> (bits * (n - 1 - i) as u32)) & mask) as u32;
        }
        Monomial::from_exponents(&e)
    }

    pub(super) fn mul_rational(a: &MultiPoly<BigRational>, b: &MultiPoly<BigRational>) -> Option<MultiPoly<BigRational>> {
        let n = a.nvars();
        if n == 0 || n > 8 {
            return None;
        }
        let bits = (64 / n as u32).min(32);
        let max_exp = |p: &MultiPoly<BigRational>| p.terms.keys().flat_map(|m| m.exponents().iter().copied()).max().unwrap_or(0);
        if u64::from(max_exp(a) + max_exp(b)) >= 1u64 << bits {
            return None;
        }
        let (pa, pb) = (pack(a, bits), pack(b, bits));
        let denom = &pa.denom * &pb.denom;
        let small = |v: &[BigInt]| v.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>();
        let mut terms = std::collections::BTreeMap::new();
        let mut emit = |key: u64, num: BigInt| {
            if !num.is_zero() {
                terms.insert(unpack(key, n, bits), BigRational::new(num, denom.clone()));
            }
        };
        let bound = |v: &[i64]| v.iter().map(|x| x.unsigned_abs() as u128).max().unwrap_or(0);
        match (small(&pa.numers), small(&pb.numers)) {
            (Some(na), Some(nb))
                if bound(&na)
                    .checked_mul(bound(&nb))
                    .and_then(|m| m.checked_mul(na.len().min(nb.len()) as u128))
                    .is_some_and(|m| m < 1u128 << 126) =>
            {
                let mut acc: FxHashMap<u64, i128> = FxHashMap::default();
                acc.reserve(pa.keys.len().max(pb.keys.len()) * 4);
                for (ka, ca) in pa.keys.iter().zip(&na) {
                    for (kb, cb) in pb.keys.iter().zip(&nb) {
                        *acc.entry(ka + kb).or_insert(0) += i128::from(*ca) * i128::from(*cb);
                    }
                }
                for (k, v) in acc {
                    emit(k, BigInt::from(v));
                }
            }
            _ => {
                let mut acc: FxHashMap<u64, BigInt> = FxHashMap::default();
                for (ka, ca) in pa.keys.iter().zip(&pa.numers) {
                    for (kb, cb) in pb.keys.iter().zip(&pb.numers) {
                        *acc.entry(ka + kb).or_default() += ca * cb;
                    }
                }
                for (k, v) in acc {
                    emit(k, v);
                }
            }
        }
        Some(MultiPoly { vars: a.vars.clone(), terms })
    }
}

impl<S: Scalar> fmt::Display for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in self.vars.iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<S: Scalar> $tr<&MultiPoly<S>> for &MultiPoly<S> {
            type Output = MultiPoly<S>;
            /// # Panics
            /// If the operands live over different variable sets; use the
            /// `try_` form to get an error instead.
            fn $method(self, rhs: &MultiPoly<S>) -> MultiPoly<S> {
                self.$checked(rhs).expect("polynomial operands over different variable sets")
            }
        }

        impl<S: Scalar> $tr<MultiPoly<S>> for MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $method(self, rhs: MultiPoly<S>) -> MultiPoly<S> {
                (&self).$method(&rhs)
            }
        }

        impl<S: Scalar> $tr<&MultiPoly<S>> for MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $method(self, rhs: &MultiPoly<S>) -> MultiPoly<S> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<S: Scalar> Neg for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        self.scale(&(-S::one()))
    }
}

impl<S: Scalar> Neg for MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        -&self
    }
}
