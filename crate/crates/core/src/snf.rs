//! Smith normal form over the integers and the abelian groups it reads off.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::IntMatrix;

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal with
/// `d[0] | d[1] | ...`, all non-negative.
#[derive(Debug, Clone, PartialEq)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Cokernel of `a` viewed as a map `Z^cols -> Z^rows`.
    pub fn cokernel(&self) -> AbelianGroup {
        let diag = self.diagonal();
        let torsion: Vec<BigInt> = diag.iter().filter(|x| !x.is_zero() && !x.is_one()).cloned().collect();
        AbelianGroup { free_rank: self.d.rows() - self.rank(), torsion }
    }
}

/// Finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/t_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == t).count();
            parts.push(if run == 1 { format!("Z/{t}") } else { format!("(Z/{t})^{run}") });
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Row and column reduction with the pivot taken as the entry of smallest
/// absolute value.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&d, t, t..m, t..n) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(d[(i, t)].div_floor(&d[(t, t)]));
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(d[(t, j)].div_floor(&d[(t, t)]));
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                // a remainder survived: move the smallest entry of the
                // pivot row/column into the pivot position and repeat
                let (pi, pj) = smallest_in_cross(&d, t);
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let p = d[(t, t)].clone();
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match offending {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { d, u, v }
}

fn smallest_nonzero(
    d: &IntMatrix,
    _t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let a = d[(i, j)].abs();
            if !a.is_zero() && best.as_ref().is_none_or(|(_, b)| &a < b) {
                best = Some(((i, j), a));
            }
        }
    }
    best.map(|(p, _)| p)
}

fn smallest_in_cross(d: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = ((t, t), d[(t, t)].abs());
    for i in t + 1..d.rows() {
        let a = d[(i, t)].abs();
        if !a.is_zero() && a < best.1 {
            best = ((i, t), a);
        }
    }
    for j in t + 1..d.cols() {
        let a = d[(t, j)].abs();
        if !a.is_zero() && a < best.1 {
            best = ((t, j), a);
        }
    }
    best.0
}

/// First homology of the torus bundle over the circle with the given
/// monodromy: `Z ⊕ coker(A - I)`.
pub fn torus_bundle_h1(monodromy: &IntMatrix) -> AbelianGroup {
    let n = monodromy.rows();
    let shifted = monodromy.try_add(&IntMatrix::identity(n).scale(&BigInt::from(-1))).expect("square monodromy");
    let mut g = smith_normal_form(&shifted).cokernel();
    g.free_rank += 1;
    g
}
