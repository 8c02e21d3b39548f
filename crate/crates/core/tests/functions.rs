use kappa_core::{
    deformation_constants, exp_kappa, exp_kappa_checked, exp_kappa_taylor, kappa_factorial, kappa_sum,
    ln_kappa, ln_kappa_taylor, xi_poly, DeformKind, KappaError, KappaParam, XiPolynomialTable,
};
use proptest::prelude::*;

fn k(v: f64) -> KappaParam {
    KappaParam::new(v).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

#[test]
fn mpmath_values() {
    assert!(rel(exp_kappa(1.0, k(0.5)), 2.618_033_988_749_895) < 1e-15);
    assert!(rel(exp_kappa(-2.5, k(0.35)), 0.104_598_619_038_244_31) < 1e-14);
    assert!(rel(ln_kappa(3.0, k(0.7)).unwrap(), 1.210_147_302_287_588) < 1e-15);
    assert_eq!(ln_kappa(4.0, k(0.5)).unwrap(), 1.5);
}

#[test]
fn constants_and_errors() {
    let c = deformation_constants(k(0.5)).unwrap();
    assert!((c.gamma - 1.0 / 0.75f64.sqrt()).abs() < 1e-15);
    assert!((c.epsilon - 3f64.powf(1.0)).abs() < 1e-14);
    assert!(deformation_constants(k(1.0)).is_err());
    assert!(matches!(ln_kappa(-1.0, k(0.3)), Err(KappaError::Domain { .. })));
    assert!(exp_kappa_checked(1e308, KappaParam::ZERO).is_err());
}

#[test]
fn series_prefixes() {
    let kp = k(0.4);
    for (n, want) in [(0, 1.0), (1, 1.0), (2, 1.0), (3, 1.0 - 0.16), (4, 1.0 - 0.64)] {
        assert!((xi_poly(n, kp) - want).abs() < 1e-15, "xi_{n}");
    }
    assert!((1.0 / kappa_factorial(3, kp).unwrap() - 0.84 / 6.0).abs() < 1e-16);
    let t = exp_kappa_taylor(0.3, kp, 25).unwrap();
    assert!(rel(t.value, exp_kappa(0.3, kp)) < 1e-14);
    let l = ln_kappa_taylor(0.2, kp, 60).unwrap();
    assert!(rel(l.value, ln_kappa(1.2, kp).unwrap()) < 1e-12);
    let table = XiPolynomialTable::new(kp, 6);
    assert_eq!(table.values().len(), 7);
}

proptest! {
    #[test]
    fn exp_ln_inverse(kv in 0.0f64..0.99, x in -30.0f64..30.0) {
        let kp = k(kv);
        let back = ln_kappa(exp_kappa(x, kp), kp).unwrap();
        prop_assert!((back - x).abs() <= 1e-12 * x.abs().max(1.0));
    }

    #[test]
    fn homomorphism(kv in 0.0f64..0.99, x in -8.0f64..8.0, y in -8.0f64..8.0) {
        let kp = k(kv);
        let s = kappa_sum(x, y, kp, DeformKind::Hyperbolic).unwrap();
        prop_assert!(rel(exp_kappa(x, kp) * exp_kappa(y, kp), exp_kappa(s, kp)) < 1e-12);
    }

    #[test]
    fn reflection(kv in 0.0f64..1.5, x in -50.0f64..50.0) {
        let kp = k(kv);
        prop_assert!(rel(exp_kappa(x, kp) * exp_kappa(-x, kp), 1.0) < 1e-14);
    }

    #[test]
    fn ln_is_odd_in_log(kv in 0.0f64..0.99, lx in -10.0f64..10.0) {
        let kp = k(kv);
        let x = lx.exp();
        let (a, b) = (ln_kappa(x, kp).unwrap(), ln_kappa(1.0 / x, kp).unwrap());
        prop_assert!((a + b).abs() <= 1e-13 * a.abs().max(1.0));
    }

    #[test]
    fn exp_above_ordinary_for_positive(kv in 0.01f64..0.99, x in 0.01f64..20.0) {
        // {x} < x for x > 0, so exp_κ(x) < exp(x); the reverse below zero
        let kp = k(kv);
        prop_assert!(exp_kappa(x, kp) <= x.exp());
        prop_assert!(exp_kappa(-x, kp) >= (-x).exp());
    }
}
