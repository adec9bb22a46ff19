use fricke::family::{sphere_character, torus_character, KappaParams, Sl2};
use fricke::group::{word_to_map, Generator, GroupWord};
use fricke::homology::{homology_action, intersection_form, Basis};
use fricke::scalar::rat;
use fricke::{smith_normal_form, IntMatrix, Integer, Map3, Poly, PolyMap, Rational, SqrtAlgebra};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const XYZ: [&str; 3] = ["x", "y", "z"];

fn small_rat() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_terms: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg, 0..=max_deg), small_rat()), 0..=max_terms)
        .prop_map(|terms| Poly::from_terms(&XYZ, terms.into_iter().map(|((a, b, c), q)| (vec![a, b, c], q))))
}

fn map(max_terms: usize, max_deg: u32) -> impl Strategy<Value = Map3> {
    (poly(max_terms, max_deg), poly(max_terms, max_deg), poly(max_terms, max_deg))
        .prop_map(|(a, b, c)| PolyMap::new([a, b, c]).unwrap())
}

fn point() -> impl Strategy<Value = [Rational; 3]> {
    (small_rat(), small_rat(), small_rat()).prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(6, 3), b in poly(6, 3), c in poly(6, 3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(6, 3), b in poly(6, 3), p in point()) {
        prop_assert_eq!((&a * &b).eval(&p), a.eval(&p) * b.eval(&p));
        prop_assert_eq!((&a + &b).eval(&p), a.eval(&p) + b.eval(&p));
    }

    #[test]
    fn composition_is_associative(f in map(3, 2), g in map(3, 2), h in map(3, 1)) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn composition_evaluates_pointwise(f in map(4, 2), g in map(4, 2), p in point()) {
        let fg = f.compose(&g).unwrap();
        prop_assert_eq!(fg.eval(&p).unwrap(), f.eval(&g.eval(&p).unwrap()).unwrap());
    }

    #[test]
    fn jacobian_chain_rule(f in map(3, 2), g in map(3, 2)) {
        let lhs = f.compose(&g).unwrap().jacobian_determinant();
        let rhs = g.pullback(&f.jacobian_determinant()).unwrap() * g.jacobian_determinant();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn smith_form(rows in 1usize..=4, cols in 1usize..=4, entries in prop::collection::vec(-6i64..=6, 16)) {
        let a = IntMatrix::from_rows((0..rows).map(|i| (0..cols).map(|j| Integer::from(entries[i * cols + j])).collect()).collect()).unwrap();
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.try_mul(&a).unwrap().try_mul(&s.v).unwrap(), s.d.clone());
        prop_assert_eq!(s.u.determinant().abs(), Integer::from(1));
        prop_assert_eq!(s.v.determinant().abs(), Integer::from(1));
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            // each invariant factor divides the next
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
        if rows == cols {
            let prod = diag.iter().fold(Integer::from(1), |acc, d| acc * d);
            prop_assert_eq!(prod, a.determinant().abs());
        }
    }

    /// With `t − 2 = a²` and `t + 2 = b²` the algebra maps onto `Q`.
    #[test]
    fn sqrt_algebra_instantiation(k in (1i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d)),
                                  x in prop::array::uniform4(small_rat()), y in prop::array::uniform4(small_rat())) {
        // (b − a)(b + a) = 4 with b − a = k
        let a = (rat(4, 1) / &k - &k) / rat(2, 1);
        let b = &a + &k;
        let t = &a * &a + rat(2, 1);
        let alg = SqrtAlgebra::new(t);
        let (ra, rb) = (a.abs(), b.abs());
        let value = |c: &[Rational; 4]| &c[0] + &c[1] * &ra + &c[2] * &rb + &c[3] * &ra * &rb;
        let (ex, ey) = (alg.elem(x.clone()), alg.elem(y.clone()));
        let prod = &ex * &ey;
        prop_assert_eq!(value(prod.coords()), value(&x) * value(&y));
        prop_assert_eq!(prod.as_rational(), Some(value(&x) * value(&y)));
        prop_assert_eq!((&ex - &ex).vanishes(), true);
        prop_assert_eq!(ex.vanishes(), value(&x).is_zero());
    }

    #[test]
    fn fricke_identity_over_rationals(a in sl2(), b in sl2()) {
        let c = torus_character(&a, &b);
        prop_assert_eq!(&c.kappa, &c.commutator_trace);
    }

    #[test]
    fn sphere_relation_over_rationals(d1 in sl2(), d2 in sl2(), d3 in sl2()) {
        let c = sphere_character(&d1, &d2, &d3);
        prop_assert!(c.on_surface);
        prop_assert_eq!(&c.kappa, &c.s);
    }

    #[test]
    fn gamma_action_preserves_the_form(letters in prop::collection::vec(0usize..6, 0..12)) {
        let w = GroupWord::new(letters.iter().map(|&i| Generator::GAMMA_ALPHABET[i]).collect());
        let a = homology_action(&word_to_map(&w, &KappaParams::zero()).unwrap()).unwrap();
        let q = intersection_form(Basis::VanishingCycle).matrix;
        prop_assert_eq!(a.transpose().try_mul(&q).unwrap().try_mul(&a).unwrap(), q);
    }
}

/// `[[a, b], [c, (1 + bc)/a]]`
fn sl2() -> impl Strategy<Value = Sl2> {
    (small_rat().prop_filter("nonzero", |a| !a.is_zero()), small_rat(), small_rat()).prop_map(|(a, b, c)| {
        let d = (rat(1, 1) + &b * &c) / &a;
        Sl2::new(a, b, c, d).unwrap()
    })
}
