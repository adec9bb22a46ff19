//! Degree reduction of automorphisms of `κ_{P,Q,R}`.
//!
//! An automorphism `f` of top degree above one has exactly one `τ_i` with
//! `deg(τ_i ∘ f) < deg f`; peeling those off leaves an affine map, which must
//! be one of the signed permutations preserving the cubic.

use num_traits::Zero;

use super::generator::Generator;
use super::signed_perm::{affine_stabilizer, SignedPerm};
use super::word::{tau_component, GroupWord};
use crate::error::{Error, Result};
use crate::family::{build_kappa, KappaParams};
use crate::poly::{PolyMap, XYZ};
use crate::{Map3, Poly};

/// `κ_{P,Q,R} ∘ f = κ_{P,Q,R}` as polynomials.
pub fn is_automorphism(f: &Map3, params: &KappaParams) -> bool {
    if !f.vars().iter().map(String::as_str).eq(XYZ) {
        return false;
    }
    let k = build_kappa(params);
    f.pullback(&k).map(|p| p == k).unwrap_or(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Tau letters in the order they were peeled off, followed by the affine
    /// tail, so that `word_to_map(word) = f`.
    pub word: GroupWord,
    /// Top degree before each step, ending with the degree of the tail.
    pub degrees: Vec<u32>,
}

impl Decomposition {
    pub fn tail(&self) -> SignedPerm {
        self.word.tail_or_identity()
    }
}

/// Top degree of `τ ∘ f`, for the tau moving coordinate `i`, without forming the product unless the leading
/// forms cancel; in that case the new component is returned as well.
fn predict(i: usize, f: &Map3, d: [u32; 3], params: &KappaParams) -> Result<(u32, Option<Poly>)> {
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let c = f.components();
    let s = d[j] + d[k];
    let di = if s > d[i] {
        s
    } else if s < d[i] {
        d[i]
    } else if c[j].leading_form().try_mul(&c[k].leading_form())? == c[i].leading_form() {
        let new = tau_component(i, f, params)?;
        let nd = new.total_degree();
        return Ok((nd.max(d[j]).max(d[k]), Some(new)));
    } else {
        d[i]
    };
    Ok((di.max(d[j]).max(d[k]), None))
}

/// Writes `f = τ_{i1} ∘ … ∘ τ_{ik} ∘ ℓ` with the tau word reduced and `ℓ` a
/// signed permutation preserving `κ_{P,Q,R}`.
pub fn horowitz_decompose(f: &Map3, params: &KappaParams) -> Result<Decomposition> {
    if !f.vars().iter().map(String::as_str).eq(XYZ) {
        return Err(Error::Dimension("map must be over x, y, z".into()));
    }
    let fail = |e: Error| if is_automorphism(f, params) { e } else { Error::NotAutomorphism };
    let mut g = f.clone();
    let mut letters = Vec::new();
    let mut degrees = Vec::new();
    loop {
        let d = g.component_degrees();
        let top = g.degree();
        degrees.push(top);
        if top <= 1 {
            break;
        }
        let mut reducer = None;
        for i in 0..3 {
            let tau = Generator::tau_moving(i);
            let (nd, new) = predict(i, &g, d, params)?;
            if nd < top {
                if reducer.is_some() {
                    return Err(fail(Error::InvariantBreach(format!("two taus lower degree {top}"))));
                }
                let new = match new {
                    Some(p) => p,
                    None => tau_component(i, &g, params)?,
                };
                reducer = Some((i, tau, new));
            }
        }
        let Some((i, tau, new)) = reducer else {
            return Err(fail(Error::InvariantBreach(format!("no tau lowers degree {top}"))));
        };
        let mut comps = g.into_components();
        comps[i] = new;
        g = PolyMap::new(comps)?;
        letters.push(tau);
    }
    let tail = affine_stabilizer(params)
        .into_iter()
        .find(|l| l.to_map() == g)
        .ok_or_else(|| fail(Error::NotInStabilizer(g.to_string())))?;
    Ok(Decomposition { word: GroupWord::with_tail(letters, tail), degrees })
}

/// Constant Jacobian determinant of `f`, when it is ±1.
pub fn jacobian_sign(f: &Map3) -> Result<i64> {
    let j = f.jacobian_determinant();
    match j.as_constant() {
        Some(c) if c == crate::scalar::int(1) => Ok(1),
        Some(c) if c == crate::scalar::int(-1) => Ok(-1),
        Some(c) if c.is_zero() => Err(Error::NonConstantJacobian("0".into())),
        _ => Err(Error::NonConstantJacobian(j.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generator::{dehn_twist, generator, Twist};
    use crate::group::word::word_to_map;
    use crate::poly::parse_poly_map;
    use crate::scalar::rat;

    #[test]
    fn automorphism_checks() {
        let zero = KappaParams::zero();
        let p = KappaParams::new(rat(1, 3), rat(-2, 1), rat(5, 4));
        assert!(is_automorphism(&generator(Generator::Tau2, &p).unwrap(), &p));
        assert!(!is_automorphism(&parse_poly_map("x; y; z + 1").unwrap(), &zero));
        assert!(is_automorphism(&generator(Generator::Gamma, &zero).unwrap(), &zero));
    }

    #[test]
    fn twists_decompose() {
        let zero = KappaParams::zero();
        let id = horowitz_decompose(&PolyMap::identity(), &zero).unwrap();
        assert!(id.word.is_empty());
        let p = KappaParams::new(rat(1, 2), rat(3, 1), rat(-1, 5));
        let d = horowitz_decompose(&dehn_twist(Twist::X, &p), &p).unwrap();
        assert_eq!(d.word.to_string(), "t3 t1");
        assert_eq!(d.degrees, vec![3, 2, 1]);
        let y = horowitz_decompose(&dehn_twist(Twist::Y, &p), &p).unwrap();
        assert_eq!(y.word.to_string(), "t1 t2");
    }

    #[test]
    fn tails_survive() {
        let zero = KappaParams::zero();
        let w = GroupWord::parse("t2 t1 t3 perm(zxy)flip(xy)").unwrap();
        let d = horowitz_decompose(&word_to_map(&w, &zero).unwrap(), &zero).unwrap();
        assert_eq!(d.word, w);
    }

    #[test]
    fn rejects_non_automorphisms() {
        let zero = KappaParams::zero();
        let e = horowitz_decompose(&parse_poly_map("x; y; z + 1").unwrap(), &zero).unwrap_err();
        assert_eq!(e, Error::NotAutomorphism);
        let e = horowitz_decompose(&parse_poly_map("x^2; y; z").unwrap(), &zero).unwrap_err();
        assert_eq!(e, Error::NotAutomorphism);
    }

    #[test]
    fn jacobian_signs() {
        let zero = KappaParams::zero();
        assert_eq!(jacobian_sign(&generator(Generator::Tau1, &zero).unwrap()).unwrap(), -1);
        assert!(jacobian_sign(&parse_poly_map("x^2; y; z").unwrap()).is_err());
    }
}
