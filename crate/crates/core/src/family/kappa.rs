use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, XYZ, XYZ_PQR};
use crate::scalar::{int, parse_rational};
use crate::{Poly, RatMatrix, Rational};

/// The parameter triple selecting `κ_{P,Q,R}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KappaParams {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
}

impl KappaParams {
    pub fn new(p: Rational, q: Rational, r: Rational) -> Self {
        KappaParams { p, q, r }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn ints(p: i64, q: i64, r: i64) -> Self {
        Self::new(int(p), int(q), int(r))
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero() && self.r.is_zero()
    }

    pub fn as_array(&self) -> [Rational; 3] {
        [self.p.clone(), self.q.clone(), self.r.clone()]
    }

    /// Parses `P,Q,R`.
    pub fn parse(s: &str) -> Result<Self> {
        let [p, q, r] = parse_triple(s)?;
        Ok(Self::new(p, q, r))
    }
}

impl fmt::Display for KappaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.q, self.r)
    }
}

/// Parses three comma-separated rationals.
pub fn parse_triple(s: &str) -> Result<[Rational; 3]> {
    let v = parse_list(s)?;
    v.try_into().map_err(|v: Vec<Rational>| Error::Parse {
        position: 0,
        message: format!("expected three comma-separated rationals, found {}", v.len()),
    })
}

/// Parses a comma-separated list of rationals.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        out.push(parse_rational(part).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse { position: offset, message },
            e => e,
        })?);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// `κ_{P,Q,R}` over `x, y, z`.
pub fn build_kappa(params: &KappaParams) -> Poly {
    let [x, y, z] = coords(&XYZ);
    let c = |q: &Rational| Poly::constant(&XYZ, q.clone());
    let sq = &(&(&x * &x) + &(&y * &y)) + &(&z * &z);
    let lin = &(&(&c(&params.p) * &x) + &(&c(&params.q) * &y)) + &(&c(&params.r) * &z);
    &(&(&sq - &(&(&x * &y) * &z)) - &lin) - &c(&int(2))
}

/// `κ_{P,Q,R}` over `x, y, z, P, Q, R` with symbolic parameters.
pub fn build_kappa_symbolic() -> Poly {
    let v = Poly::vars_of(&XYZ_PQR);
    let (x, y, z, p, q, r) = (&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]);
    let sq = &(&(x * x) + &(y * y)) + &(z * z);
    let lin = &(&(p * x) + &(q * y)) + &(r * z);
    &(&(&sq - &(&(x * y) * z)) - &lin) - &Poly::constant(&XYZ_PQR, int(2))
}

fn coords(vars: &[&str]) -> [Poly; 3] {
    let v = MultiPoly::vars_of(vars);
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

/// The three partial derivatives of `κ_{P,Q,R}`.
pub fn gradient(params: &KappaParams) -> [Poly; 3] {
    let k = build_kappa(params);
    [0, 1, 2].map(|i| k.partial(i))
}

pub fn is_critical(params: &KappaParams, p: &[Rational; 3]) -> bool {
    gradient(params).iter().all(|g| g.eval(p).is_zero())
}

/// Matrix of second partials at a point together with its nondegeneracy.
#[derive(Debug, Clone, PartialEq)]
pub struct Hessian {
    pub matrix: RatMatrix,
    pub nondegenerate: bool,
}

/// Second partials `[[2, −z, −y], [−z, 2, −x], [−y, −x, 2]]`; independent of
/// the parameters, which only enter through the criticality check.
pub fn hessian(params: &KappaParams, p: &[Rational; 3]) -> Result<Hessian> {
    if !is_critical(params, p) {
        return Err(Error::NotCritical(format!("{}, {}, {}", p[0], p[1], p[2])));
    }
    let matrix = hessian_matrix(p);
    let nondegenerate = !matrix.determinant().is_zero();
    Ok(Hessian { matrix, nondegenerate })
}

pub fn hessian_matrix(p: &[Rational; 3]) -> RatMatrix {
    let [x, y, z] = p;
    RatMatrix::from_rows(vec![
        vec![int(2), -z.clone(), -y.clone()],
        vec![-z.clone(), int(2), -x.clone()],
        vec![-y.clone(), -x.clone(), int(2)],
    ])
    .expect("3x3")
}

/// Hessian of `κ` at `(2ε₁, 2ε₂, 2ε₁ε₂)` in the coordinates
/// `x̂ = ε₁x − 2, ŷ = ε₂y − 2, ẑ = ε₁ε₂z − 2`.
pub fn local_chart_hessian(e1: i64, e2: i64) -> RatMatrix {
    let p = [int(2 * e1), int(2 * e2), int(2 * e1 * e2)];
    let j = RatMatrix::diagonal(&[int(e1), int(e2), int(e1 * e2)]);
    &(&j.transpose() * &hessian_matrix(&p)) * &j
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn kappa_at_zero_params() {
        let k = build_kappa(&KappaParams::zero());
        assert_eq!(k.to_string(), "-x*y*z + x^2 + y^2 + z^2 - 2");
        assert_eq!(k.nterms(), 5);
    }

    #[test]
    fn evaluation_off_zero() {
        let k = build_kappa(&KappaParams::ints(1, 0, 0));
        assert_eq!(k.eval(&[rat(1, 2), int(0), int(0)]), rat(-9, 4));
    }

    #[test]
    fn symbolic_specializes() {
        let s = build_kappa_symbolic();
        let z = s.specialize(&[(3, int(0)), (4, int(0)), (5, int(0))]).embed(&XYZ).unwrap();
        assert_eq!(z, build_kappa(&KappaParams::zero()));
        let k = s.specialize(&[(3, int(1)), (4, rat(-2, 3)), (5, int(5))]).embed(&XYZ).unwrap();
        assert_eq!(k, build_kappa(&KappaParams::new(int(1), rat(-2, 3), int(5))));
    }

    #[test]
    fn hessians() {
        let zero = KappaParams::zero();
        let h = hessian(&zero, &[int(0), int(0), int(0)]).unwrap();
        assert_eq!(h.matrix, RatMatrix::from_i64(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]));
        assert!(h.nondegenerate);
        let expected = RatMatrix::from_i64(&[&[2, -2, -2], &[-2, 2, -2], &[-2, -2, 2]]);
        for (e1, e2) in [(1, -1), (-1, 1), (-1, -1), (1, 1)] {
            assert_eq!(local_chart_hessian(e1, e2), expected);
        }
        assert!(hessian(&KappaParams::ints(1, 0, 0), &[rat(1, 2), int(0), int(0)]).unwrap().nondegenerate);
        assert!(matches!(hessian(&zero, &[int(1), int(0), int(0)]), Err(Error::NotCritical(_))));
    }

    #[test]
    fn parses_params() {
        assert_eq!(KappaParams::parse("1,-2,3/4").unwrap(), KappaParams::new(int(1), int(-2), rat(3, 4)));
        assert!(KappaParams::parse("1,2").is_err());
        assert!(matches!(KappaParams::parse("1,x,3"), Err(Error::Parse { position: 2, .. })));
    }
}
