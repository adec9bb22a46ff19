use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::generator::Generator;
use super::perm::Perm;
use super::signed_perm::SignedPerm;
use super::word::{word_to_map, GroupWord};
use crate::family::KappaParams;
use crate::error::{Error, Result};

/// A class in `PGL(2, Z)`: an integer matrix with determinant ±1, up to sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PglClass {
    m: [[BigInt; 2]; 2],
}

impl PglClass {
    pub fn new(m: [[BigInt; 2]; 2]) -> Result<Self> {
        let c = PglClass { m };
        let d = c.det_raw();
        if !(d.is_one() || (-d).is_one()) {
            return Err(Error::NotUnimodular(c.det_raw().to_string()));
        }
        Ok(c.canonical())
    }

    pub fn ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new([[a.into(), b.into()], [c.into(), d.into()]])
    }

    pub fn identity() -> Self {
        PglClass { m: [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]] }
    }

    fn canonical(mut self) -> Self {
        let first = self.m.iter().flatten().find(|e| !e.is_zero()).cloned().unwrap_or_default();
        if first.is_negative() {
            for e in self.m.iter_mut().flatten() {
                *e = -&*e;
            }
        }
        self
    }

    /// The canonical representative: first nonzero entry (row-major) positive.
    pub fn entries(&self) -> &[[BigInt; 2]; 2] {
        &self.m
    }

    fn det_raw(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    /// Determinant, well defined on the class since the matrix is 2×2.
    pub fn det(&self) -> i64 {
        if self.det_raw().is_one() {
            1
        } else {
            -1
        }
    }

    pub fn mul(&self, other: &PglClass) -> PglClass {
        let (a, b) = (&self.m, &other.m);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        PglClass { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }.canonical()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Image in `PGL(2, Z/2) ≅ S₃`, acting on the nonzero vectors
    /// `(1,0), (0,1), (1,1)` of `(Z/2)²` by `v ↦ M v`.
    pub fn mod2(&self) -> Perm {
        let bit = |e: &BigInt| u8::from(e.is_odd());
        let m = self.m.clone().map(|r| r.map(|e| bit(&e)));
        let vs: [[u8; 2]; 3] = [[1, 0], [0, 1], [1, 1]];
        let images = vs
            .iter()
            .map(|v| {
                let w = [(m[0][0] * v[0] + m[0][1] * v[1]) % 2, (m[1][0] * v[0] + m[1][1] * v[1]) % 2];
                vs.iter().position(|u| *u == w).expect("invertible mod 2")
            })
            .collect();
        Perm::from_images(images)
    }

    /// Off-diagonal entries both even.
    pub fn congruence_member(&self) -> bool {
        self.m[0][1].is_even() && self.m[1][0].is_even()
    }
}

impl fmt::Display for PglClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// Matrix of a single letter.
pub fn generator_matrix(g: Generator) -> PglClass {
    let m = |a, b, c, d| PglClass::ints(a, b, c, d).expect("unimodular");
    match g {
        Generator::Alpha => m(0, -1, 1, 0),
        Generator::Beta => m(1, -1, 1, 0),
        Generator::Gamma => m(-1, 0, 0, 1),
        Generator::SigmaX | Generator::SigmaY | Generator::SigmaZ => PglClass::identity(),
        Generator::Tau1 => m(1, 0, 0, -1),
        Generator::Tau2 => m(1, 0, 2, -1),
        Generator::Tau3 => m(1, 2, 0, -1),
    }
}

/// Γ-word whose map is the pure coordinate permutation `perm`.
fn permutation_word(perm: [usize; 3]) -> Vec<Generator> {
    use Generator::*;
    // (y,x,z) = α∘γ and (y,z,x) = β generate S₃
    let candidates: [&[Generator]; 6] =
        [&[], &[Beta], &[Beta, Beta], &[Alpha, Gamma], &[Beta, Alpha, Gamma], &[Beta, Beta, Alpha, Gamma]];
    let zero = KappaParams::zero();
    candidates
        .into_iter()
        .find(|w| {
            let f = word_to_map(&GroupWord::new(w.to_vec()), &zero).expect("Γ letters at zero");
            SignedPerm::from_map(&f).map(|l| l.perm()) == Some(perm)
        })
        .expect("every permutation is reached")
        .to_vec()
}

/// Product of generator matrices in word order.
///
/// Mixed words over both alphabets are rejected, as are tau words with an
/// L-element tail: the two matrix dictionaries do not agree on where the
/// taus land inside `PGL(2, Z)`.
pub fn word_to_pgl(w: &GroupWord) -> Result<PglClass> {
    let has_tau = w.letters.iter().any(|g| g.is_tau());
    let has_gamma = w.letters.iter().any(|g| !g.is_tau());
    if has_tau && has_gamma {
        return Err(Error::Alphabet("word mixes tau letters with the alphabet of Γ".into()));
    }
    let mut letters = w.letters.clone();
    if let Some(t) = &w.tail {
        if has_tau {
            return Err(Error::Alphabet("tau words map to PGL(2, Z) only without an L-element tail".into()));
        }
        letters.extend(permutation_word(t.perm()));
    }
    Ok(letters.iter().fold(PglClass::identity(), |acc, &g| acc.mul(&generator_matrix(g))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PglCharacters {
    pub det: i64,
    pub mod2: Perm,
    pub congruence_member: bool,
}

pub fn pgl_characters(m: &PglClass) -> PglCharacters {
    PglCharacters { det: m.det(), mod2: m.mod2(), congruence_member: m.congruence_member() }
}
