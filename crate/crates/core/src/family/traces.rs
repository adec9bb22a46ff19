//! Trace coordinates on SL(2) character varieties of the one-holed torus and
//! the four-holed sphere.

use std::fmt;

use num_traits::{One, Zero};

use super::kappa::{build_kappa, parse_list, KappaParams};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::int;
use crate::{Poly, Rational};

/// A 2×2 rational matrix of determinant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2 {
    m: [[Rational; 2]; 2],
}

impl Sl2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(Sl2 { m: [[a, b], [c, d]] })
    }

    pub fn ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        Sl2 { m: [[Rational::one(), Rational::zero()], [Rational::zero(), Rational::one()]] }
    }

    /// Parses `a,b,c,d` (row-major).
    pub fn parse(s: &str) -> Result<Self> {
        let v = parse_list(s)?;
        let [a, b, c, d]: [Rational; 4] = v.try_into().map_err(|v: Vec<Rational>| Error::Parse {
            position: 0,
            message: format!("expected four comma-separated entries, found {}", v.len()),
        })?;
        Self::new(a, b, c, d)
    }

    pub fn entries(&self) -> &[[Rational; 2]; 2] {
        &self.m
    }

    pub fn trace(&self) -> Rational {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn mul(&self, o: &Sl2) -> Sl2 {
        let e = |i: usize, j: usize| &self.m[i][0] * &o.m[0][j] + &self.m[i][1] * &o.m[1][j];
        Sl2 { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn inverse(&self) -> Sl2 {
        let [[a, b], [c, d]] = &self.m;
        Sl2 { m: [[d.clone(), -b.clone()], [-c.clone(), a.clone()]] }
    }
}

impl fmt::Display for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// Parameters `(P, Q, R)` and fiber value `S` of the relative character
/// variety of the four-holed sphere with boundary traces `t`.
pub fn traces_to_params(t: &[Rational; 4]) -> (KappaParams, Rational) {
    let [t1, t2, t3, t4] = t;
    let p = -(t1 * t2 + t3 * t4);
    let q = -(t1 * t4 + t2 * t3);
    let r = -(t1 * t3 + t2 * t4);
    let s = int(2) - t1 * t1 - t2 * t2 - t3 * t3 - t4 * t4 - t1 * t2 * t3 * t4;
    (KappaParams::new(p, q, r), s)
}

/// The same formulas as polynomials in `t1, t2, t3, t4`: `[P, Q, R, S]`.
pub fn traces_to_params_symbolic() -> [Poly; 4] {
    let vars = ["t1", "t2", "t3", "t4"];
    let v = MultiPoly::vars_of(&vars);
    let (t1, t2, t3, t4) = (&v[0], &v[1], &v[2], &v[3]);
    let p = -&(&(t1 * t2) + &(t3 * t4));
    let q = -&(&(t1 * t4) + &(t2 * t3));
    let r = -&(&(t1 * t3) + &(t2 * t4));
    let squares = &(&(&(t1 * t1) + &(t2 * t2)) + &(t3 * t3)) + &(t4 * t4);
    let s = &(&Poly::constant(&vars, int(2)) - &squares) - &(&(&(t1 * t2) * t3) * t4);
    [p, q, r, s]
}

/// Trace coordinates of a representation of the free group on `X`, `Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusCharacter {
    pub point: [Rational; 3],
    pub commutator_trace: Rational,
    /// `κ(x, y, z)`; equals the commutator trace.
    pub kappa: Rational,
}

pub fn torus_character(a: &Sl2, b: &Sl2) -> TorusCharacter {
    let point = [a.trace(), b.trace(), a.mul(b).trace()];
    let commutator_trace = a.mul(b).mul(&a.inverse()).mul(&b.inverse()).trace();
    let kappa = build_kappa(&KappaParams::zero()).eval(&point);
    TorusCharacter { point, commutator_trace, kappa }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SphereCharacter {
    pub traces: [Rational; 4],
    pub point: [Rational; 3],
    pub params: KappaParams,
    pub s: Rational,
    /// `κ_{P,Q,R}(x, y, z)`
    pub kappa: Rational,
    pub on_surface: bool,
}

/// Sphere with four boundary loops `δ1 δ2 δ3 δ4 = 1`; the coordinates are
/// `(−tr δ1δ2, −tr δ2δ3, −tr δ3δ1)`.
pub fn sphere_character(d1: &Sl2, d2: &Sl2, d3: &Sl2) -> SphereCharacter {
    let d4 = d1.mul(d2).mul(d3).inverse();
    let traces = [d1.trace(), d2.trace(), d3.trace(), d4.trace()];
    let point = [-d1.mul(d2).trace(), -d2.mul(d3).trace(), -d3.mul(d1).trace()];
    let (params, s) = traces_to_params(&traces);
    let kappa = build_kappa(&params).eval(&point);
    let on_surface = kappa == s;
    SphereCharacter { traces, point, params, s, kappa, on_surface }
}
