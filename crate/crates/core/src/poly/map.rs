use std::fmt;

use super::{MultiPoly, XYZ};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A polynomial self-map `(f1, f2, f3)` of affine 3-space.
///
/// The components share a variable set that starts with `x, y, z`. Any
/// further variables are parameters: composition leaves them fixed, which is
/// how identities valid for every `(P, Q, R)` are checked.
#[derive(Clone, PartialEq)]
pub struct PolyMap<S> {
    components: [MultiPoly<S>; 3],
}

impl<S: Scalar> PolyMap<S> {
    pub fn new(components: [MultiPoly<S>; 3]) -> Result<Self> {
        let [a, b, c] = &components;
        for p in [b, c] {
            if !a.same_vars(p) {
                return Err(Error::VariableMismatch { left: a.vars().join(","), right: p.vars().join(",") });
            }
        }
        if a.nvars() < 3 || a.vars()[..3] != XYZ {
            return Err(Error::VariableMismatch { left: a.vars().join(","), right: XYZ.join(",") });
        }
        Ok(PolyMap { components })
    }

    pub fn identity() -> Self {
        Self::identity_over(&XYZ)
    }

    /// Identity over `x, y, z` followed by the given parameter names.
    pub fn identity_over<V: AsRef<str>>(vars: &[V]) -> Self {
        let v = MultiPoly::vars_of(vars);
        PolyMap { components: [v[0].clone(), v[1].clone(), v[2].clone()] }
    }

    pub fn components(&self) -> &[MultiPoly<S>; 3] {
        &self.components
    }

    pub fn into_components(self) -> [MultiPoly<S>; 3] {
        self.components
    }

    pub fn vars(&self) -> &[String] {
        self.components[0].vars()
    }

    /// Maximum total degree of the components in `x, y, z`.
    pub fn degree(&self) -> u32 {
        self.components.iter().map(|c| c.degree_in(&[0, 1, 2])).max().unwrap_or(0)
    }

    pub fn component_degrees(&self) -> [u32; 3] {
        [0, 1, 2].map(|i| self.components[i].degree_in(&[0, 1, 2]))
    }

    fn images(&self) -> Vec<MultiPoly<S>> {
        let mut v: Vec<MultiPoly<S>> = self.components.to_vec();
        let n = self.components[0].nvars();
        v.extend((3..n).map(|i| self.components[0].variable(i)));
        v
    }

    /// `p ∘ self`, i.e. `p(f1, f2, f3)`.
    pub fn pullback(&self, p: &MultiPoly<S>) -> Result<MultiPoly<S>> {
        p.substitute(&self.images())
    }

    /// `self ∘ g`: the map `p ↦ self(g(p))`.
    pub fn compose(&self, g: &PolyMap<S>) -> Result<PolyMap<S>> {
        let images = g.images();
        let [a, b, c] = &self.components;
        PolyMap::new([a.substitute(&images)?, b.substitute(&images)?, c.substitute(&images)?])
    }

    /// Image of a point; only for maps without parameter variables.
    pub fn eval(&self, point: &[S; 3]) -> Result<[S; 3]> {
        if self.components[0].nvars() != 3 {
            return Err(Error::Dimension("map has free parameters; specialize it first".into()));
        }
        Ok([0, 1, 2].map(|i| self.components[i].eval(point)))
    }

    /// Determinant of the matrix of partial derivatives in `x, y, z`.
    pub fn jacobian_determinant(&self) -> MultiPoly<S> {
        let d: Vec<Vec<MultiPoly<S>>> =
            self.components.iter().map(|f| (0..3).map(|j| f.partial(j)).collect()).collect();
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &(&d[r1][c1] * &d[r2][c2]) - &(&d[r1][c2] * &d[r2][c1]);
        let t0 = &d[0][0] * &minor(1, 2, 1, 2);
        let t1 = &d[0][1] * &minor(1, 2, 0, 2);
        let t2 = &d[0][2] * &minor(1, 2, 0, 1);
        &(&t0 - &t1) + &t2
    }

    /// Substitutes constants for parameter variables (by index into the
    /// variable set).
    pub fn specialize(&self, assignments: &[(usize, S)]) -> PolyMap<S> {
        PolyMap { components: [0, 1, 2].map(|i| self.components[i].specialize(assignments)) }
    }

    /// Re-expresses the map over another variable set that also begins with
    /// `x, y, z`.
    pub fn embed<V: AsRef<str>>(&self, vars: &[V]) -> Result<PolyMap<S>> {
        let [a, b, c] = &self.components;
        PolyMap::new([a.embed(vars)?, b.embed(vars)?, c.embed(vars)?])
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> PolyMap<T> {
        PolyMap { components: [0, 1, 2].map(|i| self.components[i].map_coeffs(&f)) }
    }
}

impl<S: Scalar> fmt::Display for PolyMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.components;
        write!(f, "{a}; {b}; {c}")
    }
}

impl<S: Scalar> fmt::Debug for PolyMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMap({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly_map;
    use crate::scalar::int;
    use crate::Rational;

    fn m(s: &str) -> PolyMap<Rational> {
        parse_poly_map(s).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let g = m("y; x; x*y - z");
        assert_eq!(PolyMap::identity().compose(&g).unwrap(), g);
        assert_eq!(g.compose(&PolyMap::identity()).unwrap(), g);
    }

    #[test]
    fn gamma_is_an_involution() {
        let g = m("x; y; x*y - z");
        assert_eq!(g.compose(&g).unwrap(), PolyMap::identity());
    }

    #[test]
    fn tau3_after_tau1() {
        let t3 = m("x; x*z - y; z");
        let t1 = m("x; y; x*y - z");
        assert_eq!(t3.compose(&t1).unwrap(), m("x; x^2*y - x*z - y; x*y - z"));
    }

    #[test]
    fn evaluation() {
        let p = [int(1), int(2), int(3)];
        assert_eq!(PolyMap::identity().eval(&p).unwrap(), p);
        assert_eq!(m("y; x; x*y - z").eval(&[int(2), int(-2), int(-2)]).unwrap(), [int(-2), int(2), int(-2)]);
        assert_eq!(m("y; z; x").eval(&[int(2), int(-2), int(-2)]).unwrap(), [int(-2), int(-2), int(2)]);
    }

    #[test]
    fn jacobians() {
        let c = |s: &str| m(s).jacobian_determinant().as_constant();
        assert_eq!(c("x; y; x*y - z"), Some(int(-1)));
        assert_eq!(c("y; x; x*y - z"), Some(int(1)));
        assert_eq!(c("-x; -y; z"), Some(int(1)));
        assert_eq!(c("x^2; y; z"), None);
    }

    #[test]
    fn parameters_stay_fixed() {
        let vars = ["x", "y", "z", "R"];
        let v = MultiPoly::<Rational>::vars_of(&vars);
        let tau1 = PolyMap::new([v[0].clone(), v[1].clone(), &(&(&v[0] * &v[1]) - &v[2]) + &v[3]]).unwrap();
        assert_eq!(tau1.compose(&tau1).unwrap(), PolyMap::identity_over(&vars));
        assert_eq!(tau1.degree(), 2);
        assert!(tau1.eval(&[int(0), int(0), int(0)]).is_err());
    }

    #[test]
    fn rejects_foreign_variables() {
        let a = MultiPoly::<Rational>::var(&["u", "v", "w"], "u").unwrap();
        assert!(PolyMap::new([a.clone(), a.clone(), a]).is_err());
    }
}
