use hurwitz_lerch::evaluator::special_value;
use hurwitz_lerch::zeros::{classify, RegionTag};
use hurwitz_lerch::{evaluate, QuadConfig};
use num_complex::Complex64;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Phi(s, a, z) = 2^(-s) [Phi(s, a/2, z^2) + z Phi(s, (a+1)/2, z^2)]
    #[test]
    fn duplication(s in -0.95f64..0.95, a in 0.05f64..=1.0, r in 0.1f64..0.9, th in 0.0f64..6.2) {
        prop_assume!(s.abs() > 1e-3);
        let cfg = QuadConfig::default();
        let z = Complex64::from_polar(r, th);
        let lhs = evaluate(s, a, z, &cfg).unwrap().value;
        let rhs = (evaluate(s, a / 2.0, z * z, &cfg).unwrap().value
            + z * evaluate(s, (a + 1.0) / 2.0, z * z, &cfg).unwrap().value)
            * 2f64.powf(-s);
        prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + lhs.norm()));
    }

    // conj(Phi(s, a, z)) = Phi(s, a, conj z) on the unit circle
    #[test]
    fn conjugate_symmetry(s in -0.95f64..-0.05, a in 0.05f64..1.0, th in 0.1f64..3.0) {
        let cfg = QuadConfig::default();
        let z = Complex64::from_polar(1.0, th);
        let p = evaluate(s, a, z, &cfg).unwrap().value;
        let q = evaluate(s, a, z.conj(), &cfg).unwrap().value;
        prop_assert!((p.conj() - q).norm() < 1e-10);
    }

    // zeta(s, a/2) + zeta(s, (a+1)/2) = 2^s zeta(s, a)
    #[test]
    fn hurwitz_duplication(s in -0.95f64..0.95, a in 0.05f64..=1.0) {
        prop_assume!(s.abs() > 1e-3);
        let cfg = QuadConfig::default();
        let one = Complex64::new(1.0, 0.0);
        let z = |x: f64| evaluate(s, x, one, &cfg).unwrap().value.re;
        let lhs = z(a / 2.0) + z((a + 1.0) / 2.0);
        prop_assert!((lhs - 2f64.powf(s) * z(a)).abs() < 1e-9);
    }

    // continuity at the closed forms
    #[test]
    fn approaches_special_values(a in 0.05f64..1.0, th in 0.3f64..6.0) {
        let cfg = QuadConfig::default();
        let z = Complex64::from_polar(1.0, th);
        let near = evaluate(-1e-7, a, z, &cfg).unwrap().value;
        prop_assert!((near - special_value(0, a, z).unwrap()).norm() < 1e-5);
    }

    #[test]
    fn classification_is_exhaustive(a in 0.001f64..=1.0, r in 0.01f64..=1.0, th in -3.1f64..3.1) {
        let z = Complex64::from_polar(r, th);
        prop_assume!((z - 1.0).norm() > 1e-9);
        let v = classify(a, z).unwrap();
        if z.im != 0.0 {
            prop_assert_eq!(v.tag, RegionTag::CaseIII);
        }
    }

    #[test]
    fn real_z_rule(a in 0.001f64..=1.0, z in -1.0f64..0.999) {
        prop_assume!(z != 0.0);
        let v = classify(a, Complex64::new(z, 0.0)).unwrap();
        prop_assert_eq!(v.tag.zero_free(), (1.0 - z) * (1.0 - a) <= 1.0);
    }
}
