//! The rank-5 lattice `H₂` of a smooth fiber, its intersection forms, the
//! action of `Γ` on it, and the link at infinity.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::family::KappaParams;
use crate::group::{gamma_to_s4, is_automorphism, GroupWord, Perm};
use crate::snf::{smith_normal_form, torus_bundle_h1, AbelianGroup};
use crate::{IntMatrix, Map3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Four vanishing cycles at the points of `κ = 2` and one at the origin.
    VanishingCycle,
    /// The chain `α₁, …, α₅` read off the lines of a smooth fiber.
    Alpha,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::VanishingCycle => "vanishing_cycle",
            Basis::Alpha => "alpha",
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        match s.trim() {
            "vc" | "vanishing_cycle" => Ok(Basis::VanishingCycle),
            "alpha" => Ok(Basis::Alpha),
            other => Err(Error::Parse { position: 0, message: format!("unknown basis `{other}`, expected vc or alpha") }),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionForm {
    pub basis: Basis,
    pub matrix: IntMatrix,
}

pub fn intersection_form(basis: Basis) -> IntersectionForm {
    let matrix = match basis {
        Basis::VanishingCycle => IntMatrix::from_i64(&[
            &[-2, 0, 0, 0, 1],
            &[0, -2, 0, 0, 1],
            &[0, 0, -2, 0, 1],
            &[0, 0, 0, -2, 1],
            &[1, 1, 1, 1, -2],
        ]),
        Basis::Alpha => IntMatrix::from_i64(&[
            &[-4, 2, 0, 0, 0],
            &[2, -2, -1, 0, 0],
            &[0, -1, -2, 1, 0],
            &[0, 0, 1, -2, 2],
            &[0, 0, 0, 2, -4],
        ]),
    };
    IntersectionForm { basis, matrix }
}

/// Columns are the vanishing cycles in `α`-coordinates:
/// `−(α₄+α₅), −α₄, α₁+α₂, α₂, −α₃`.
pub fn basis_change() -> IntMatrix {
    IntMatrix::from_i64(&[
        &[0, 0, 1, 0, 0],
        &[0, 0, 1, 1, 0],
        &[0, 0, 0, 0, -1],
        &[-1, -1, 0, 0, 0],
        &[-1, 0, 0, 0, 0],
    ])
}

/// `ε · (P(σ) ⊕ 1)` with `P[σ(i)][i] = 1`.
pub fn signed_permutation_block(perm: &Perm, sign: i64) -> IntMatrix {
    let mut rows = vec![vec![BigInt::from(0); 5]; 5];
    for i in 0..4 {
        rows[perm.apply(i)][i] = BigInt::from(sign);
    }
    rows[4][4] = BigInt::from(sign);
    IntMatrix::from_rows(rows).expect("square")
}

/// Action of an automorphism of `κ` on `H₂` of a smooth fiber, in the
/// vanishing-cycle basis.
pub fn homology_action(f: &Map3) -> Result<IntMatrix> {
    if !is_automorphism(f, &KappaParams::zero()) {
        return Err(Error::NotAutomorphism);
    }
    let (perm, sign) = gamma_to_s4(f)?;
    Ok(signed_permutation_block(&perm, sign))
}

/// `(−1)^{#τ letters}` times the Jacobian sign of the tail; an element of the
/// congruence subgroup acts on `H₂` as this multiple of the identity.
pub fn sign_character(w: &GroupWord, _params: &KappaParams) -> Result<i64> {
    if !w.is_tau_word() {
        return Err(Error::Alphabet("sign character is defined on tau words".into()));
    }
    let parity = if w.letters.len() % 2 == 0 { 1 } else { -1 };
    Ok(parity * w.tail_or_identity().jacobian_sign())
}

/// `∏ [[0, −1], [1, −e_i]]` in list order.
pub fn link_monodromy(euler: &[i64]) -> Result<IntMatrix> {
    if euler.is_empty() {
        return Err(Error::Dimension("a cyclic configuration needs at least one curve".into()));
    }
    let mut a = IntMatrix::identity(2);
    for &e in euler {
        a = a.try_mul(&IntMatrix::from_i64(&[&[0, -1], &[1, -e]]))?;
    }
    Ok(a)
}

/// `H₁` of the link, as the cokernel of an intersection matrix.
pub fn link_h1(form: &IntMatrix) -> AbelianGroup {
    smith_normal_form(form).cokernel()
}

/// `H₁` of the torus bundle with the given plumbing cycle.
pub fn link_h1_from_euler(euler: &[i64]) -> Result<AbelianGroup> {
    Ok(torus_bundle_h1(&link_monodromy(euler)?))
}
