use super::horowitz::jacobian_sign;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::scalar::int;
use crate::{Map3, Rational};

/// The four `A1` points of the fiber `κ = 2`, in their fixed order.
pub fn singular_points() -> [[Rational; 3]; 4] {
    [[2, -2, -2], [-2, 2, -2], [-2, -2, 2], [2, 2, 2]].map(|p| p.map(int))
}

/// Permutation of the four singular points induced by `f`, together with the
/// constant Jacobian determinant of `f`.
pub fn gamma_to_s4(f: &Map3) -> Result<(Perm, i64)> {
    let sign = jacobian_sign(f)?;
    let points = singular_points();
    let mut images = Vec::with_capacity(4);
    for p in &points {
        let q = f.eval(p)?;
        let i = points.iter().position(|s| *s == q).ok_or_else(|| {
            let shown: Vec<String> = q.iter().map(ToString::to_string).collect();
            Error::NotSingularPoint(shown.join(", "))
        })?;
        images.push(i);
    }
    let mut seen = images.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != 4 {
        return Err(Error::NotAutomorphism);
    }
    Ok((Perm::from_images(images), sign))
}
