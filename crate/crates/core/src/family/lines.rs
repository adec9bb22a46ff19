//! The 24 affine lines on a smooth fiber `κ = t` of the parameter-free cubic.
//!
//! Projecting to `z`, the special fibers `z = 2, √(t+2), −√(t+2), −2` each
//! split into two lines `L1 … L8`; cyclically permuting coordinates gives
//! the lines of the `x`- and `y`-projections.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{int, rat};
use crate::sqrt_algebra::{SqrtAlgebra, SqrtElem};
use crate::{IntMatrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }

    /// Sends a point written for the `z`-projection to the corresponding
    /// point for this projection.
    fn place<T: Clone>(self, [a, b, c]: [T; 3]) -> [T; 3] {
        match self {
            Axis::Z => [a, b, c],
            Axis::X => [c, a, b],
            Axis::Y => [b, c, a],
        }
    }
}

/// The affine line `base + u·direction` with coordinates in the square-root
/// algebra of its fiber.
#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    pub label: u8,
    pub axis: Axis,
    pub base: [SqrtElem; 3],
    pub direction: [SqrtElem; 3],
    /// The defining equations, e.g. `z = 2, x = y + r_m`.
    pub plane: String,
}

impl Line {
    pub fn name(&self) -> String {
        format!("L{}{}", self.label, self.axis.name())
    }

    pub fn t(&self) -> &Rational {
        self.base[0].t()
    }

    /// Base point and direction over `Q`, when both square roots are rational.
    pub fn rational(&self) -> Option<([Rational; 3], [Rational; 3])> {
        let conv = |v: &[SqrtElem; 3]| -> Option<[Rational; 3]> {
            let [a, b, c] = v;
            Some([a.as_rational()?, b.as_rational()?, c.as_rational()?])
        };
        Some((conv(&self.base)?, conv(&self.direction)?))
    }

    /// Coefficients, in the line parameter `u`, of `κ(base + u·dir) − t`.
    pub fn fiber_residual(&self) -> Vec<SqrtElem> {
        let k = SqrtAlgebra::new(self.t().clone());
        // each coordinate as a linear polynomial in u
        let coord: Vec<Vec<SqrtElem>> =
            (0..3).map(|i| vec![self.base[i].clone(), self.direction[i].clone()]).collect();
        let sq = |p: &[SqrtElem]| upoly_mul(&k, p, p);
        let mut acc = upoly_add(&k, &upoly_add(&k, &sq(&coord[0]), &sq(&coord[1])), &sq(&coord[2]));
        let xyz = upoly_mul(&k, &upoly_mul(&k, &coord[0], &coord[1]), &coord[2]);
        acc = upoly_add(&k, &acc, &xyz.iter().map(|c| -c).collect::<Vec<_>>());
        acc[0] = &acc[0] - &k.rational(int(2) + self.t());
        acc
    }

    /// The line lies on its fiber as an identity in the algebra.
    pub fn lies_on_fiber(&self) -> bool {
        self.fiber_residual().iter().all(SqrtElem::is_zero)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[SqrtElem; 3]| {
            let [a, b, c] = v;
            match (a.as_rational(), b.as_rational(), c.as_rational()) {
                (Some(a), Some(b), Some(c)) => format!("({a}, {b}, {c})"),
                _ => format!("({a}, {b}, {c})"),
            }
        };
        write!(f, "{}: {} + u*{}  [{}]", self.name(), show(&self.base), show(&self.direction), self.plane)
    }
}

fn upoly_add(k: &SqrtAlgebra, a: &[SqrtElem], b: &[SqrtElem]) -> Vec<SqrtElem> {
    (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| k.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| k.zero());
            &x + &y
        })
        .collect()
}

fn upoly_mul(k: &SqrtAlgebra, a: &[SqrtElem], b: &[SqrtElem]) -> Vec<SqrtElem> {
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// The eight lines of one projection.
pub fn lines_for_axis(t: &Rational, axis: Axis) -> Result<Vec<Line>> {
    if *t == int(2) || *t == int(-2) {
        return Err(Error::SingularFiber(t.to_string()));
    }
    let k = SqrtAlgebra::new(t.clone());
    let (rm, rp) = (k.r_minus(), k.r_plus());
    let q = |v: i64| k.rational(int(v));
    let half = rat(1, 2);
    let lam = (&rp + &rm).scale(&half);
    let mu = (&rp - &rm).scale(&half);
    let zero = k.zero();

    let specs: [(u8, [SqrtElem; 3], [SqrtElem; 3], &str); 8] = [
        (1, [rm.clone(), zero.clone(), q(2)], [q(1), q(1), zero.clone()], "z = 2, x = y + r_m"),
        (2, [-&rm, zero.clone(), q(2)], [q(1), q(1), zero.clone()], "z = 2, x = y - r_m"),
        (3, [zero.clone(), zero.clone(), rp.clone()], [lam.clone(), q(1), zero.clone()], "z = r_p, x = (r_p + r_m)/2*y"),
        (4, [zero.clone(), zero.clone(), rp.clone()], [mu.clone(), q(1), zero.clone()], "z = r_p, x = (r_p - r_m)/2*y"),
        (5, [zero.clone(), zero.clone(), -&rp], [-&lam, q(1), zero.clone()], "z = -r_p, x = -(r_p + r_m)/2*y"),
        (6, [zero.clone(), zero.clone(), -&rp], [-&mu, q(1), zero.clone()], "z = -r_p, x = -(r_p - r_m)/2*y"),
        (7, [rm.clone(), zero.clone(), q(-2)], [q(-1), q(1), zero.clone()], "z = -2, x = -y + r_m"),
        (8, [-&rm, zero.clone(), q(-2)], [q(-1), q(1), zero.clone()], "z = -2, x = -y - r_m"),
    ];
    Ok(specs
        .into_iter()
        .map(|(label, base, direction, plane)| Line {
            label,
            axis,
            base: axis.place(base),
            direction: axis.place(direction),
            plane: rename(plane, axis),
        })
        .collect())
}

fn rename(plane: &str, axis: Axis) -> String {
    let [a, b, c] = axis.place(['x', 'y', 'z']);
    plane
        .chars()
        .map(|ch| match ch {
            'x' => a,
            'y' => b,
            'z' => c,
            other => other,
        })
        .collect()
}

/// All 24 affine lines, eight per projection, ordered `x`, `y`, `z`.
pub fn lines_on_fiber(t: &Rational) -> Result<Vec<Line>> {
    let mut out = Vec::with_capacity(24);
    for axis in Axis::ALL {
        out.extend(lines_for_axis(t, axis)?);
    }
    Ok(out)
}

fn cross(u: &[SqrtElem; 3], v: &[SqrtElem; 3]) -> [SqrtElem; 3] {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

/// 1 if the lines meet in affine space or at infinity, else 0.
pub fn line_incidence(a: &Line, b: &Line) -> Result<u8> {
    if a.t() != b.t() {
        return Err(Error::Dimension(format!("lines on fibers t = {} and t = {}", a.t(), b.t())));
    }
    let c = cross(&a.direction, &b.direction);
    if c.iter().all(SqrtElem::vanishes) {
        return Ok(1);
    }
    let d: Vec<SqrtElem> = (0..3).map(|i| &b.base[i] - &a.base[i]).collect();
    let det = &(&(&c[0] * &d[0]) + &(&c[1] * &d[1])) + &(&c[2] * &d[2]);
    Ok(u8::from(det.vanishes()))
}

/// Labels (in the `z`-projection) of the five classes `L8 − L5, L7 − L5,
/// L1 − L3, L2 − L3, L5 − L4`.
pub const CLASS_LABELS: [(u8, u8); 5] = [(8, 5), (7, 5), (1, 3), (2, 3), (5, 4)];

fn intersection(a: &Line, b: &Line) -> Result<i64> {
    if a.label == b.label && a.axis == b.axis {
        return Ok(-1);
    }
    Ok(i64::from(line_incidence(a, b)?))
}

/// Gram matrix of the five difference classes, with `L·L = −1`.
pub fn class_gram(t: &Rational) -> Result<IntMatrix> {
    let lines = lines_for_axis(t, Axis::Z)?;
    let line = |l: u8| &lines[usize::from(l) - 1];
    let mut g = IntMatrix::zeros(5, 5);
    for (i, &(a, b)) in CLASS_LABELS.iter().enumerate() {
        for (j, &(c, d)) in CLASS_LABELS.iter().enumerate() {
            let v = intersection(line(a), line(c))? - intersection(line(a), line(d))?
                - intersection(line(b), line(c))?
                + intersection(line(b), line(d))?;
            g[(i, j)] = v.into();
        }
    }
    Ok(g)
}

/// Incidence matrix of all 24 lines (diagonal left at zero).
pub fn incidence_matrix(t: &Rational) -> Result<IntMatrix> {
    let lines = lines_on_fiber(t)?;
    let mut m = IntMatrix::zeros(24, 24);
    for i in 0..24 {
        for j in 0..24 {
            if i != j {
                m[(i, j)] = line_incidence(&lines[i], &lines[j])?.into();
            }
        }
    }
    Ok(m)
}
