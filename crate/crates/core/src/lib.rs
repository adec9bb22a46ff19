//! Exact algebra for the cubic family
//! `κ_{P,Q,R}(x, y, z) = x² + y² + z² − xyz − Px − Qy − Rz − 2`.
//!
//! The polynomial and matrix layers are generic over [`scalar::Scalar`]; the
//! geometry works over [`Rational`].

pub mod error;
pub mod family;
pub mod group;
pub mod homology;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod snf;
pub mod sqrt_algebra;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use poly::{parse_poly, parse_poly_map, MultiPoly, PolyMap, UniPoly};
pub use scalar::{parse_rational, Scalar};
pub use snf::{smith_normal_form, AbelianGroup, SnfResult};
pub use sqrt_algebra::{SqrtAlgebra, SqrtElem};

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

pub type Poly = MultiPoly<Rational>;
pub type Map3 = PolyMap<Rational>;
pub type IntMatrix = Matrix<Integer>;
pub type RatMatrix = Matrix<Rational>;

pub type PolyF64 = MultiPoly<f64>;
pub type MatrixF64 = Matrix<f64>;
