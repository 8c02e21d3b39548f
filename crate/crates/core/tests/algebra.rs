use kappa_core::{
    deform_inv, deform_map, kappa_div, kappa_inverse, kappa_nfold_sum, kappa_prod, kappa_sum, kappa_unit,
    DeformKind, KappaError, KappaParam,
};
use proptest::prelude::*;

const HYP: DeformKind = DeformKind::Hyperbolic;
const CYC: DeformKind = DeformKind::Cyclic;

fn k(v: f64) -> KappaParam {
    KappaParam::new(v).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

#[test]
fn mpmath_values() {
    // mpmath, 40 digits
    assert!(close(kappa_sum(1.2, -0.4, k(0.6), HYP).unwrap(), 0.741_182_675_065_534_7, 1e-15));
    assert!(close(kappa_prod(2.0, 3.0, k(0.3), HYP).unwrap(), 7.365_761_877_892_928, 1e-14));
    let pi = deform_map(2.0, k(0.5), CYC).unwrap();
    assert!((pi - std::f64::consts::PI).abs() < 1e-15);
}

#[test]
fn cyclic_domain() {
    assert!(matches!(deform_map(2.1, k(0.5), CYC), Err(KappaError::Domain { .. })));
    assert!(deform_map(f64::NAN, k(0.5), HYP).is_err());
    assert_eq!(deform_map(3.5, KappaParam::ZERO, CYC).unwrap(), 3.5);
}

#[test]
fn unit_and_division() {
    let kp = k(0.4);
    let i = kappa_unit(kp, HYP);
    assert!(close(kappa_prod(i, 2.5, kp, HYP).unwrap(), 2.5, 1e-14));
    let q = kappa_div(3.0, 1.7, kp, HYP).unwrap();
    assert!(close(kappa_prod(q, 1.7, kp, HYP).unwrap(), 3.0, 1e-13));
    assert!(kappa_inverse(0.0, kp, HYP).is_err());
}

proptest! {
    #[test]
    fn sum_is_associative(kv in 1e-6f64..0.99, x in -10.0f64..10.0, y in -10.0f64..10.0, z in -10.0f64..10.0) {
        let kp = k(kv);
        let a = kappa_sum(kappa_sum(x, y, kp, HYP).unwrap(), z, kp, HYP).unwrap();
        let b = kappa_sum(x, kappa_sum(y, z, kp, HYP).unwrap(), kp, HYP).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * x.abs().max(y.abs()).max(z.abs()).max(a.abs()));
    }

    #[test]
    fn product_distributes(kv in 1e-6f64..0.99, x in 0.1f64..5.0, y in 0.1f64..5.0, z in 0.1f64..5.0) {
        let kp = k(kv);
        let a = kappa_prod(x, kappa_sum(y, z, kp, HYP).unwrap(), kp, HYP).unwrap();
        let b = kappa_sum(kappa_prod(x, y, kp, HYP).unwrap(), kappa_prod(x, z, kp, HYP).unwrap(), kp, HYP).unwrap();
        prop_assert!(close(a, b, 1e-11));
    }

    #[test]
    fn maps_are_inverse(kv in 0.0f64..2.0, x in -50.0f64..50.0) {
        let kp = k(kv);
        let back = deform_inv(deform_map(x, kp, HYP).unwrap(), kp, HYP).unwrap();
        prop_assert!(close(back, x, 1e-13));
    }

    #[test]
    fn brace_is_odd(kv in 0.0f64..2.0, x in -50.0f64..50.0) {
        let kp = k(kv);
        prop_assert_eq!(deform_map(-x, kp, HYP).unwrap(), -deform_map(x, kp, HYP).unwrap());
    }

    #[test]
    fn nfold_sum_is_scaled_brace(kv in 0.01f64..0.9, x in -3.0f64..3.0, n in 1u32..8) {
        let kp = k(kv);
        let s = kappa_nfold_sum(n, x, kp, HYP).unwrap();
        let want = deform_inv(n as f64 * deform_map(x, kp, HYP).unwrap(), kp, HYP).unwrap();
        prop_assert!(close(s, want, 1e-12));
    }

    #[test]
    fn cyclic_sum_isomorphism(kv in 0.05f64..0.95, u in -0.7f64..0.7, v in -0.7f64..0.7) {
        let kp = k(kv);
        // angles within π/4 of zero
        let (u, v) = (u / kv, v / kv);
        let x = deform_inv(u, kp, CYC).unwrap();
        let y = deform_inv(v, kp, CYC).unwrap();
        let s = deform_map(kappa_sum(x, y, kp, CYC).unwrap(), kp, CYC).unwrap();
        prop_assert!(close(s, u + v, 1e-12));
    }
}
