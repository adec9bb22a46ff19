use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::family::{build_kappa, KappaParams};
use crate::poly::{MultiPoly, PolyMap, XYZ};
use crate::scalar::int;
use crate::{Map3, Poly};

const AXES: [char; 3] = ['x', 'y', 'z'];

/// The linear map whose `i`-th output component is `signs[i] · x_{perm[i]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: [usize; 3],
    signs: [i8; 3],
}

impl SignedPerm {
    pub fn new(perm: [usize; 3], signs: [i8; 3]) -> Option<Self> {
        let mut p = perm;
        p.sort_unstable();
        (p == [0, 1, 2] && signs.iter().all(|s| s.abs() == 1)).then_some(SignedPerm { perm, signs })
    }

    pub fn identity() -> Self {
        SignedPerm { perm: [0, 1, 2], signs: [1, 1, 1] }
    }

    /// All 48 signed permutations of the coordinates.
    pub fn all() -> Vec<SignedPerm> {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut out = Vec::with_capacity(48);
        for perm in PERMS {
            for bits in 0..8u8 {
                let signs = [0, 1, 2].map(|i| if bits >> i & 1 == 1 { -1 } else { 1 });
                out.push(SignedPerm { perm, signs });
            }
        }
        out
    }

    pub fn perm(&self) -> [usize; 3] {
        self.perm
    }

    pub fn signs(&self) -> [i8; 3] {
        self.signs
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm {
            perm: [0, 1, 2].map(|i| other.perm[self.perm[i]]),
            signs: [0, 1, 2].map(|i| self.signs[i] * other.signs[self.perm[i]]),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut perm = [0; 3];
        let mut signs = [1; 3];
        for i in 0..3 {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    /// Determinant of the linear map.
    pub fn jacobian_sign(&self) -> i64 {
        let [a, b, c] = self.perm;
        let inversions = usize::from(a > b) + usize::from(a > c) + usize::from(b > c);
        let perm_sign = if inversions % 2 == 0 { 1 } else { -1 };
        perm_sign * self.signs.iter().map(|&s| i64::from(s)).product::<i64>()
    }

    /// Number of negated components is even, i.e. the sign part lies in `Σ`.
    pub fn has_even_signs(&self) -> bool {
        self.signs.iter().filter(|&&s| s < 0).count() % 2 == 0
    }

    pub fn to_map(&self) -> Map3 {
        let v = MultiPoly::vars_of(&XYZ);
        let comps = [0, 1, 2].map(|i| if self.signs[i] < 0 { -&v[self.perm[i]] } else { v[self.perm[i]].clone() });
        PolyMap::new(comps).expect("shared variables")
    }

    /// Recognizes a signed permutation among maps over `x, y, z`.
    pub fn from_map(f: &Map3) -> Option<SignedPerm> {
        if f.vars().len() != 3 {
            return None;
        }
        let mut perm = [0; 3];
        let mut signs = [1; 3];
        for (i, c) in f.components().iter().enumerate() {
            let (m, coef) = single_term(c)?;
            let e = m.exponents();
            if m.degree() != 1 {
                return None;
            }
            perm[i] = e.iter().position(|&k| k == 1)?;
            signs[i] = if coef == int(1) {
                1
            } else if coef == int(-1) {
                -1
            } else {
                return None;
            };
        }
        SignedPerm::new(perm, signs)
    }

    /// `κ_{P,Q,R} ∘ ℓ = κ_{P,Q,R}`.
    pub fn preserves(&self, params: &KappaParams) -> bool {
        let k = build_kappa(params);
        self.to_map().pullback(&k).map(|p| p == k).unwrap_or(false)
    }

    /// Parses `perm(<xyz>)` optionally followed by `flip(<axes>)`.
    pub fn parse(s: &str) -> Result<SignedPerm> {
        let bad = |message: String| Error::Parse { position: 0, message };
        let t = s.trim();
        let rest = t.strip_prefix("perm(").ok_or_else(|| bad(format!("expected `perm(...)` in `{s}`")))?;
        let close = rest.find(')').ok_or_else(|| bad("unterminated `perm(`".into()))?;
        let letters: Vec<char> = rest[..close].trim().chars().collect();
        let mut perm = [0; 3];
        if letters.len() != 3 {
            return Err(bad(format!("`perm({})` must list x, y, z once each", &rest[..close])));
        }
        for (i, ch) in letters.iter().enumerate() {
            perm[i] = AXES.iter().position(|a| a == ch).ok_or_else(|| bad(format!("unknown axis `{ch}`")))?;
        }
        let mut signs = [1; 3];
        let tail = rest[close + 1..].trim();
        if !tail.is_empty() {
            let inner = tail
                .strip_prefix("flip(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| bad(format!("expected `flip(...)`, found `{tail}`")))?;
            for ch in inner.trim().chars() {
                let i = AXES.iter().position(|&a| a == ch).ok_or_else(|| bad(format!("unknown axis `{ch}`")))?;
                signs[i] = -signs[i];
            }
        }
        SignedPerm::new(perm, signs).ok_or_else(|| bad(format!("`perm({})` is not a permutation", &rest[..close])))
    }
}

fn single_term(c: &Poly) -> Option<(crate::poly::Monomial, crate::Rational)> {
    let mut it = c.terms();
    let (m, coef) = it.next()?;
    if it.next().is_some() || coef.is_zero() {
        return None;
    }
    Some((m.clone(), coef.clone()))
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: String = self.perm.iter().map(|&i| AXES[i]).collect();
        write!(f, "perm({p})")?;
        let flips: String = (0..3).filter(|&i| self.signs[i] < 0).map(|i| AXES[i]).collect();
        if !flips.is_empty() {
            write!(f, "flip({flips})")?;
        }
        Ok(())
    }
}

/// Signed permutations preserving `κ_{P,Q,R}`.
pub fn affine_stabilizer(params: &KappaParams) -> Vec<SignedPerm> {
    SignedPerm::all().into_iter().filter(|l| l.preserves(params)).collect()
}

/// Closure of a set of signed permutations under composition.
pub fn is_group(elements: &[SignedPerm]) -> bool {
    elements.contains(&SignedPerm::identity())
        && elements.iter().all(|a| elements.iter().all(|b| elements.contains(&a.compose(b))))
        && elements.iter().all(|a| elements.contains(&a.inverse()))
}
