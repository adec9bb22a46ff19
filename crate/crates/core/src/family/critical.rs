//! Critical points and critical values of `κ_{P,Q,R}`.
//!
//! The gradient system is `2x − yz = P`, `2y − xz = Q`, `2z − xy = R`. Off
//! the planes `z = ±2` the first two equations give
//! `x = (2P + Qz)/(4 − z²)`, `y = (2Q + Pz)/(4 − z²)` and the third becomes
//! the quintic eliminant `(2z − R)(4 − z²)² − (2P + Qz)(2Q + Pz)`. On `z = 2`
//! the system is solvable only when `P + Q = 0`, on `z = −2` only when
//! `P = Q`; both cases reduce to a quadratic in `y`.

use std::fmt;

use num_traits::{Signed, Zero};

use super::kappa::{is_critical, KappaParams};
use crate::poly::UniPoly;
use crate::scalar::{int, to_f64};
use crate::{RatMatrix, Rational};

type Upoly = UniPoly<Rational>;

/// Where a critical point (or a conjugacy class of them) lives.
#[derive(Debug, Clone, PartialEq)]
pub enum PointCoords {
    Rational([Rational; 3]),
    /// Every root `s` of `minpoly` gives the point `(x(s), y(s), z(s))`; the
    /// coordinate polynomials are reduced modulo `minpoly`.
    Algebraic { minpoly: Upoly, coords: [Upoly; 3] },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CriticalValue {
    Rational(Rational),
    /// The value is one of the roots of this monic square-free polynomial.
    Algebraic(Upoly),
}

impl CriticalValue {
    pub fn vanishes_at(&self, t: &Rational) -> bool {
        match self {
            CriticalValue::Rational(v) => v == t,
            CriticalValue::Algebraic(g) => g.eval(t).is_zero(),
        }
    }
}

impl fmt::Display for CriticalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalValue::Rational(v) => write!(f, "{v}"),
            CriticalValue::Algebraic(g) => write!(f, "root of {}", g.to_string_in("v")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPoint {
    pub coords: PointCoords,
    /// Milnor number of each point in the class.
    pub multiplicity: u32,
    pub nondegenerate: bool,
    pub value: CriticalValue,
}

impl CriticalPoint {
    /// Number of points described: 1, or the degree of the minimal polynomial.
    pub fn count(&self) -> usize {
        match &self.coords {
            PointCoords::Rational(_) => 1,
            PointCoords::Algebraic { minpoly, .. } => minpoly.degree().unwrap_or(0),
        }
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.count() as u32 * self.multiplicity
    }

    pub fn rational_point(&self) -> Option<&[Rational; 3]> {
        match &self.coords {
            PointCoords::Rational(p) => Some(p),
            PointCoords::Algebraic { .. } => None,
        }
    }

    /// Floating point positions of the real points in the class.
    pub fn approximate(&self) -> Vec<[f64; 3]> {
        match &self.coords {
            PointCoords::Rational(p) => vec![p.each_ref().map(to_f64)],
            PointCoords::Algebraic { minpoly, coords } => minpoly
                .approximate_real_roots(1e-15)
                .into_iter()
                .map(|s| coords.each_ref().map(|c| c.coeffs().iter().rev().fold(0.0, |acc, a| acc * s + to_f64(a))))
                .collect(),
        }
    }
}

impl fmt::Display for CriticalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.coords {
            PointCoords::Rational([x, y, z]) => write!(f, "({x}, {y}, {z})")?,
            PointCoords::Algebraic { minpoly, coords: [x, y, z] } => write!(
                f,
                "({}, {}, {}) for {} = 0",
                x.to_string_in("s"),
                y.to_string_in("s"),
                z.to_string_in("s"),
                minpoly.to_string_in("s")
            )?,
        }
        write!(f, "  multiplicity {}  value {}", self.multiplicity, self.value)
    }
}

/// The quintic whose roots are the coordinates, on the given axis, of the
/// critical points off the planes where that coordinate is `±2`.
pub fn eliminant(params: &KappaParams, axis: usize) -> Upoly {
    let [p, q, r] = params.as_array();
    let (a, b, c) = match axis {
        0 => (p, q, r),
        1 => (q, r, p),
        _ => (r, p, q),
    };
    let s = Upoly::x();
    let k = |v: Rational| Upoly::constant(v);
    let four_minus = &k(int(4)) - &(&s * &s);
    let lhs = &(&(&s.scale(&int(2)) - &k(a)) * &four_minus) * &four_minus;
    let f1 = &k(b.clone() * int(2)) + &s.scale(&c);
    let f2 = &k(c * int(2)) + &s.scale(&b);
    &lhs - &(&f1 * &f2)
}

/// All critical points, grouped into rational points and conjugacy classes.
pub fn critical_points(params: &KappaParams) -> Vec<CriticalPoint> {
    let [p, q, r] = params.as_array();
    let mut out: Vec<CriticalPoint> = Vec::new();

    // off z = ±2: multiplicity is the order of the root of the eliminant,
    // since x and y are locally regular functions of z there
    let mut e = eliminant(params, 2);
    for root in [int(2), int(-2)] {
        let lin = Upoly::linear_root(root);
        while let Some(quot) = e.exact_div(&lin) {
            e = quot;
        }
    }
    let four_minus = Upoly::new(vec![int(4), int(0), int(-1)]);
    let x_num = Upoly::new(vec![int(2) * &p, q.clone()]);
    let y_num = Upoly::new(vec![int(2) * &q, p.clone()]);
    for (h, m) in e.factor_small() {
        let inv = four_minus.inverse_mod(&h).expect("roots avoid ±2");
        let coords = [(&x_num * &inv).rem(&h), (&y_num * &inv).rem(&h), Upoly::x().rem(&h)];
        out.push(make_point(params, h, coords, Some(m)));
    }

    // on z = 2 (needs P + Q = 0): x = y + P/2, y² + (P/2)y − (4 − R) = 0
    // on z = −2 (needs P = Q):    x = P/2 − y, y² − (P/2)y − (4 + R) = 0
    let half_p = &p / int(2);
    let planes = [
        (int(2), (&p + &q).is_zero(), Upoly::new(vec![r.clone() - int(4), half_p.clone(), int(1)])),
        (int(-2), p == q, Upoly::new(vec![-r.clone() - int(4), -half_p.clone(), int(1)])),
    ];
    for (zv, present, quad) in planes {
        if !present {
            continue;
        }
        for (h, _) in quad.factor_small() {
            let y = Upoly::x().rem(&h);
            let x = if zv.is_positive() {
                (&y + &Upoly::constant(half_p.clone())).rem(&h)
            } else {
                (&Upoly::constant(half_p.clone()) - &y).rem(&h)
            };
            out.push(make_point(params, h, [x, y, Upoly::constant(zv.clone())], None));
        }
    }

    assign_degenerate_multiplicities(&mut out);
    out
}

/// Builds a point class from coordinates over `Q[s]/(h)`; `multiplicity`
/// is `None` when it still has to be determined.
fn make_point(params: &KappaParams, h: Upoly, coords: [Upoly; 3], multiplicity: Option<u32>) -> CriticalPoint {
    let [x, y, z] = &coords;
    let red = |a: &Upoly| a.rem(&h);
    let mul = |a: &Upoly, b: &Upoly| red(&(a * b));
    let k = |v: Rational| Upoly::constant(v);

    let sq = &(&mul(x, x) + &mul(y, y)) + &mul(z, z);
    let xyz = mul(&mul(x, y), z);
    // det of the Hessian is 8 − 2(x² + y² + z² + xyz)
    let det = red(&(&k(int(8)) - &(&sq + &xyz).scale(&int(2))));
    let nondegenerate = !det.is_zero();

    let lin = &(&x.scale(&params.p) + &y.scale(&params.q)) + &z.scale(&params.r);
    let kappa = red(&(&(&(&sq - &xyz) - &lin) - &k(int(2))));

    let multiplicity = multiplicity.or(nondegenerate.then_some(1)).unwrap_or(0);
    let coords = if h.degree() == Some(1) {
        let s = -h.coeff(0);
        let pt = coords.each_ref().map(|c| c.eval(&s));
        debug_assert!(is_critical(params, &pt));
        PointCoords::Rational(pt)
    } else {
        PointCoords::Algebraic { minpoly: h.clone(), coords }
    };
    let value = match kappa.degree() {
        None | Some(0) => CriticalValue::Rational(kappa.coeff(0)),
        _ => value_polynomial(&h, &kappa),
    };
    CriticalPoint { coords, multiplicity, nondegenerate, value }
}

/// Square-free polynomial whose roots are the values `v(s)` over the roots
/// `s` of `h`: the radical of the characteristic polynomial of
/// multiplication by `v` on `Q[s]/(h)`.
fn value_polynomial(h: &Upoly, v: &Upoly) -> CriticalValue {
    let d = h.degree().unwrap_or(0);
    let mut rows = vec![vec![Rational::zero(); d]; d];
    let mut basis = Upoly::one();
    for j in 0..d {
        let col = (v * &basis).rem(h);
        for (i, row) in rows.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
        basis = (&basis * &Upoly::x()).rem(h);
    }
    let charpoly = RatMatrix::from_rows(rows).expect("square").characteristic_polynomial();
    let radical = charpoly.square_free_part().monic();
    if radical.degree() == Some(1) {
        CriticalValue::Rational(-radical.coeff(0))
    } else {
        CriticalValue::Algebraic(radical)
    }
}

/// Points on `z = ±2` with singular Hessian get their Milnor number from the
/// total, which is 5 for every member of the family.
fn assign_degenerate_multiplicities(points: &mut [CriticalPoint]) {
    let known: u32 = points.iter().filter(|c| c.multiplicity > 0).map(CriticalPoint::total_multiplicity).sum();
    let open: Vec<usize> = (0..points.len()).filter(|&i| points[i].multiplicity == 0).collect();
    let remaining = 5u32.saturating_sub(known);
    let slots: u32 = open.iter().map(|&i| points[i].count() as u32).sum();
    for &i in &open {
        // a degenerate critical point has Milnor number at least 2
        points[i].multiplicity = if slots > 0 && remaining % slots == 0 { (remaining / slots).max(2) } else { 2 };
    }
}

/// Critical values with the total Milnor number over each value; algebraic
/// values carry the multiplicity of each individual root.
pub fn critical_values(params: &KappaParams) -> Vec<(CriticalValue, u32)> {
    let mut out: Vec<(CriticalValue, u32)> = Vec::new();
    let mut add = |v: CriticalValue, m: u32| match out.iter_mut().find(|(w, _)| *w == v) {
        Some(entry) => entry.1 += m,
        None => out.push((v, m)),
    };
    for c in critical_points(params) {
        match (&c.coords, &c.value) {
            (_, CriticalValue::Rational(v)) => add(CriticalValue::Rational(v.clone()), c.total_multiplicity()),
            (PointCoords::Algebraic { minpoly, .. }, CriticalValue::Algebraic(g)) => {
                let per_root = minpoly.degree().unwrap_or(1) / g.degree().unwrap_or(1);
                for (f, _) in g.factor_small() {
                    let m = c.multiplicity * per_root as u32;
                    if f.degree() == Some(1) {
                        add(CriticalValue::Rational(-f.coeff(0)), m);
                    } else {
                        add(CriticalValue::Algebraic(f), m);
                    }
                }
            }
            (PointCoords::Rational(_), CriticalValue::Algebraic(_)) => unreachable!("rational points have rational values"),
        }
    }
    out.sort_by(|a, b| order_values(&a.0, &b.0));
    out
}

fn order_values(a: &CriticalValue, b: &CriticalValue) -> std::cmp::Ordering {
    use CriticalValue::*;
    match (a, b) {
        (Rational(x), Rational(y)) => x.cmp(y),
        (Rational(_), Algebraic(_)) => std::cmp::Ordering::Less,
        (Algebraic(_), Rational(_)) => std::cmp::Ordering::Greater,
        (Algebraic(f), Algebraic(g)) => f.to_string().cmp(&g.to_string()),
    }
}

pub fn fiber_is_smooth(params: &KappaParams, t: &Rational) -> bool {
    critical_values(params).iter().all(|(v, _)| !v.vanishes_at(t))
}

/// The four singular points of the fiber `κ = 2`, in their fixed order.
pub fn singular_points_of_two() -> [[Rational; 3]; 4] {
    [[2, -2, -2], [-2, 2, -2], [-2, -2, 2], [2, 2, 2]].map(|p| p.map(int))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::kappa::build_kappa;
    use crate::scalar::rat;

    fn rational_points(params: &KappaParams) -> Vec<[Rational; 3]> {
        let mut v: Vec<_> = critical_points(params).iter().filter_map(|c| c.rational_point().cloned()).collect();
        v.sort();
        v
    }

    #[test]
    fn five_points_at_zero() {
        let pts = critical_points(&KappaParams::zero());
        assert_eq!(pts.len(), 5);
        assert!(pts.iter().all(|c| c.multiplicity == 1 && c.nondegenerate));
        let mut expected: Vec<[Rational; 3]> = singular_points_of_two().to_vec();
        expected.push([int(0), int(0), int(0)]);
        expected.sort();
        assert_eq!(rational_points(&KappaParams::zero()), expected);
    }

    #[test]
    fn values_at_zero() {
        let v = critical_values(&KappaParams::zero());
        assert_eq!(v, vec![(CriticalValue::Rational(int(-2)), 1), (CriticalValue::Rational(int(2)), 4)]);
    }

    #[test]
    fn the_1_0_0_member() {
        let params = KappaParams::ints(1, 0, 0);
        let e = eliminant(&params, 2);
        // 2 z (z^2 - 3)(z^2 - 5)
        assert_eq!(e, Upoly::new(vec![int(0), int(30), int(0), int(-16), int(0), int(2)]));
        let pts = critical_points(&params);
        assert_eq!(pts.iter().map(CriticalPoint::total_multiplicity).sum::<u32>(), 5);
        assert_eq!(rational_points(&params), vec![[rat(1, 2), int(0), int(0)]]);
        let shown: Vec<String> = pts.iter().map(|c| c.to_string()).collect();
        assert!(shown.contains(&"(2, s, s) for s^2 - 3 = 0  multiplicity 1  value 0".to_string()), "{shown:?}");
        assert!(shown.contains(&"(-2, -s, s) for s^2 - 5 = 0  multiplicity 1  value 4".to_string()), "{shown:?}");
        assert_eq!(
            critical_values(&params),
            vec![
                (CriticalValue::Rational(rat(-9, 4)), 1),
                (CriticalValue::Rational(int(0)), 2),
                (CriticalValue::Rational(int(4)), 2)
            ]
        );
    }

    #[test]
    fn smooth_fibers() {
        assert!(fiber_is_smooth(&KappaParams::zero(), &rat(17, 4)));
        assert!(!fiber_is_smooth(&KappaParams::zero(), &int(2)));
        assert!(!fiber_is_smooth(&KappaParams::ints(1, 0, 0), &rat(-9, 4)));
    }

    #[test]
    fn approximations_are_critical() {
        let params = KappaParams::new(int(1), rat(2, 3), int(-3));
        let k = build_kappa(&params).map_coeffs(to_f64);
        let grads: Vec<_> = (0..3).map(|i| k.partial(i)).collect();
        for c in critical_points(&params) {
            for p in c.approximate() {
                for g in &grads {
                    assert!(g.eval(&p).abs() < 1e-9, "{c}: {p:?}");
                }
            }
        }
    }

    #[test]
    fn degenerate_plane_points() {
        // P = Q = 0, R = 4: on z = 2 the quadratic is y^2 = 0, an A3 point
        let params = KappaParams::ints(0, 0, 4);
        let pts = critical_points(&params);
        assert_eq!(pts.iter().map(CriticalPoint::total_multiplicity).sum::<u32>(), 5);
        let p = pts.iter().find(|c| c.rational_point() == Some(&[int(0), int(0), int(2)])).unwrap();
        assert!(!p.nondegenerate);
        assert_eq!(p.multiplicity, 3);
    }

    #[test]
    fn irrational_values_have_minimal_polynomials() {
        let params = KappaParams::ints(1, 2, 3);
        let total: u32 = critical_values(&params)
            .iter()
            .map(|(v, m)| m * match v {
                CriticalValue::Rational(_) => 1,
                CriticalValue::Algebraic(g) => g.degree().unwrap() as u32,
            })
            .sum();
        assert_eq!(total, 5);
    }
}
