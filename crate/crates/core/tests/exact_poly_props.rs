use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;
use tutte_atlas_core::exact_poly::{
    eval_zpoly, gcd, parse_rational, rational_to_f64, squarefree_decomposition, symmetric_to_z, BiPoly, IntegerPoly,
    ZPoly,
};
use tutte_atlas_core::families::{family_bipoly, family_zpoly, FamilyId};

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..5, 0u32..5, -20i64..20), 0..8).prop_map(BiPoly::from_terms)
}

fn symmetric_bipoly() -> impl Strategy<Value = BiPoly> {
    bipoly().prop_map(|p| &p + &p.swap_xy())
}

fn q_value() -> impl Strategy<Value = BigRational> {
    (1i64..40, 1i64..8).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// `x, y` on the hyperbola with `x + y = z + 2`, `xy = z + q + 1`.
fn hyperbola_point(z: Complex64, q: f64) -> (Complex64, Complex64) {
    let s = z + 2.0;
    let d = (s * s - 4.0 * (z + q + 1.0)).sqrt();
    ((s + d) / 2.0, (s - d) / 2.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn restriction_is_multiplicative(a in symmetric_bipoly(), b in symmetric_bipoly(), q in q_value()) {
        let lhs = symmetric_to_z(&(&a * &b), &q).unwrap();
        let rhs = &symmetric_to_z(&a, &q).unwrap() * &symmetric_to_z(&b, &q).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum = symmetric_to_z(&(&a + &b), &q).unwrap();
        prop_assert_eq!(sum, &symmetric_to_z(&a, &q).unwrap() + &symmetric_to_z(&b, &q).unwrap());
    }

    #[test]
    fn restriction_agrees_on_the_hyperbola(p in symmetric_bipoly(), q in q_value(), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let qf = rational_to_f64(&q);
        let z = Complex64::new(re, im);
        let (x, y) = hyperbola_point(z, qf);
        let direct = p.eval_complex(x, y);
        let via_z = eval_zpoly(&symmetric_to_z(&p, &q).unwrap(), z).unwrap();
        let scale = p.terms().map(|((i, j), c)| {
            let c: f64 = c.to_string().parse().unwrap();
            c.abs() * x.norm().powi(i as i32) * y.norm().powi(j as i32)
        }).sum::<f64>().max(1.0);
        prop_assert!((direct - via_z).norm() <= 1e-10 * scale, "{} vs {}", direct, via_z);
    }

    #[test]
    fn gcd_recovers_common_factor(r in prop::collection::vec(-9i64..9, 1..4), s in prop::collection::vec(-9i64..9, 1..4), t in prop::collection::vec(-9i64..9, 1..4)) {
        let prod = |rs: &[i64]| rs.iter().fold(ZPoly::one(), |acc, &k| acc * ZPoly::linear(BigRational::from_integer((-k).into())));
        let common = prod(&r);
        let a = &common * &prod(&s);
        let b = &common * &prod(&t);
        let g = gcd(&a, &b);
        prop_assert!(a.div_rem(&g).1.is_zero() && b.div_rem(&g).1.is_zero());
        prop_assert!(g.degree().unwrap() >= common.degree().unwrap());
        prop_assert!(common.div_rem(&g).1.is_zero() || g.div_rem(&common).1.is_zero());
    }
}

#[test]
fn exact_evaluation_matches_rational_evaluation() {
    let q = parse_rational("7/3").unwrap();
    for id in FamilyId::SWEEPABLE {
        let p = family_zpoly(id, 25, &q).unwrap();
        let ip = IntegerPoly::from_zpoly(&p);
        let as_rational = ZPoly::from_integers(ip.coeffs().iter().cloned());
        for quarters in [-14i64, -5, 2, 8] {
            let zr = BigRational::new(BigInt::from(quarters), BigInt::from(4));
            let want = rational_to_f64(&as_rational.eval_rational(&zr));
            let got = ip.eval(Complex64::new(rational_to_f64(&zr), 0.0)).to_complex();
            assert!((got.re - want).abs() <= 1e-12 * want.abs(), "{id} {got} vs {want}");
            assert!(got.im == 0.0);
        }
    }
}

#[test]
fn decomposition_multiplies_back() {
    let q = parse_rational("2").unwrap();
    for n in [7, 12] {
        let p = family_zpoly(FamilyId::Wheel, n, &q).unwrap();
        let parts = squarefree_decomposition(&p);
        assert!(parts.iter().any(|(_, m)| *m > 1), "n={n}");
        let back = parts.iter().fold(ZPoly::one(), |acc, (f, m)| acc * f.pow(*m as u32));
        assert_eq!(back, p.monic());
    }
}

#[test]
fn family_polynomials_restrict() {
    let q = parse_rational("16").unwrap();
    let c = family_bipoly(FamilyId::CounterexampleC, 0).unwrap();
    assert_eq!(symmetric_to_z(&c, &q).unwrap(), ZPoly::from_integers([218, 12, 6, 1]));
}
