//! Exact sparse polynomials and polynomial self-maps of affine 3-space.

mod map;
mod monomial;
mod multi;
mod parse;
mod univariate;

pub use map::PolyMap;
pub use monomial::Monomial;
pub use multi::MultiPoly;
pub use parse::{parse_poly, parse_poly_map};
pub use univariate::{RealRootInterval, UniPoly};

/// Variable names of the ambient space `C^3`.
pub const XYZ: [&str; 3] = ["x", "y", "z"];

/// The coordinate variables followed by the family parameters, used when
/// identities must hold for every `(P, Q, R)`.
pub const XYZ_PQR: [&str; 6] = ["x", "y", "z", "P", "Q", "R"];
