use std::fmt;

use crate::error::{Error, Result};
use crate::family::KappaParams;
use crate::poly::{parse_poly, PolyMap, XYZ_PQR};
use crate::{Map3, Poly};

/// Letters of the two alphabets: `alpha … sigma_z` generate `Γ` (parameters
/// zero only), `tau1 … tau3` generate the involutions of every `κ_{P,Q,R}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Alpha,
    Beta,
    Gamma,
    SigmaX,
    SigmaY,
    SigmaZ,
    Tau1,
    Tau2,
    Tau3,
}

use Generator::*;

impl Generator {
    pub const ALL: [Generator; 9] = [Alpha, Beta, Gamma, SigmaX, SigmaY, SigmaZ, Tau1, Tau2, Tau3];
    pub const GAMMA_ALPHABET: [Generator; 6] = [Alpha, Beta, Gamma, SigmaX, SigmaY, SigmaZ];
    pub const TAUS: [Generator; 3] = [Tau1, Tau2, Tau3];

    pub fn letter(self) -> &'static str {
        match self {
            Alpha => "a",
            Beta => "b",
            Gamma => "g",
            SigmaX => "sx",
            SigmaY => "sy",
            SigmaZ => "sz",
            Tau1 => "t1",
            Tau2 => "t2",
            Tau3 => "t3",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Alpha => "alpha",
            Beta => "beta",
            Gamma => "gamma",
            SigmaX => "sigma_x",
            SigmaY => "sigma_y",
            SigmaZ => "sigma_z",
            Tau1 => "tau1",
            Tau2 => "tau2",
            Tau3 => "tau3",
        }
    }

    /// Accepts the short letter or the long name.
    pub fn parse(s: &str) -> Option<Generator> {
        Self::ALL.into_iter().find(|g| g.letter() == s || g.name() == s)
    }

    pub fn is_tau(self) -> bool {
        matches!(self, Tau1 | Tau2 | Tau3)
    }

    pub fn is_involution(self) -> bool {
        self != Beta
    }

    /// Index 0, 1, 2 of a tau letter.
    pub fn tau_index(self) -> Option<usize> {
        match self {
            Tau1 => Some(0),
            Tau2 => Some(1),
            Tau3 => Some(2),
            _ => None,
        }
    }

    /// The coordinate a tau letter rewrites: `τ1` moves `z`, `τ2` moves `x`,
    /// `τ3` moves `y`.
    pub fn moved_coordinate(self) -> Option<usize> {
        match self {
            Tau1 => Some(2),
            Tau2 => Some(0),
            Tau3 => Some(1),
            _ => None,
        }
    }

    /// The tau letter rewriting coordinate `i`.
    pub fn tau_moving(i: usize) -> Generator {
        [Tau2, Tau3, Tau1][i]
    }

    /// The polynomial formula over `x, y, z, P, Q, R`.
    fn formula(self) -> &'static str {
        match self {
            Alpha => "y; x; x*y - z",
            Beta => "y; z; x",
            Gamma => "x; y; x*y - z",
            SigmaX => "x; -y; -z",
            SigmaY => "-x; y; -z",
            SigmaZ => "-x; -y; z",
            Tau1 => "x; y; x*y - z + R",
            Tau2 => "y*z - x + P; y; z",
            Tau3 => "x; x*z - y + Q; z",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

pub(crate) fn map_over_pqr(src: &str) -> Map3 {
    let comps: Vec<Poly> = src.split(';').map(|c| parse_poly(c, &XYZ_PQR).expect("built-in formula")).collect();
    let [a, b, c]: [Poly; 3] = comps.try_into().expect("three components");
    PolyMap::new([a, b, c]).expect("shared variables")
}

/// Specializes a map over `x, y, z, P, Q, R` to concrete parameters.
pub fn specialize_params(f: &Map3, params: &KappaParams) -> Map3 {
    let [p, q, r] = params.as_array();
    f.specialize(&[(3, p), (4, q), (5, r)]).embed(&crate::poly::XYZ).expect("parameters substituted")
}

/// The generator as a map over `x, y, z, P, Q, R` with symbolic parameters.
pub fn generator_symbolic(g: Generator) -> Result<Map3> {
    if !g.is_tau() {
        return Err(Error::Alphabet(format!("{} is defined only for parameters (0, 0, 0)", g.name())));
    }
    Ok(map_over_pqr(g.formula()))
}

/// The polynomial self-map of `C^3` attached to a generator.
pub fn generator(g: Generator, params: &KappaParams) -> Result<Map3> {
    if !g.is_tau() && !params.is_zero() {
        return Err(Error::Alphabet(format!("{} requires parameters (0, 0, 0), got {params}", g.name())));
    }
    Ok(specialize_params(&map_over_pqr(g.formula()), params))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twist {
    X,
    Y,
}

/// The Dehn twist maps
/// `τ_X = (x, x²y − xz + Rx − y + Q, xy − z + R)` and
/// `τ_Y = (yz − x + P, y, y²z − xy + Py − z + R)`.
pub fn dehn_twist(name: Twist, params: &KappaParams) -> Map3 {
    let src = match name {
        Twist::X => "x; x^2*y - x*z + R*x - y + Q; x*y - z + R",
        Twist::Y => "y*z - x + P; y; y^2*z - x*y + P*y - z + R",
    };
    specialize_params(&map_over_pqr(src), params)
}

pub fn dehn_twist_symbolic(name: Twist) -> Map3 {
    let src = match name {
        Twist::X => "x; x^2*y - x*z + R*x - y + Q; x*y - z + R",
        Twist::Y => "y*z - x + P; y; y^2*z - x*y + P*y - z + R",
    };
    map_over_pqr(src)
}
