use kappa_core::{
    bessel_kernel_check, exp_kappa, final_value, initial_value, inverse_laplace_kappa,
    kappa_convolution, laplace_kappa, laplace_kappa_from, laplace_property_check, laplace_table,
    laplace_table_complex, power_row_forms, GrowthBound, KappaError, KappaParam, LaplaceProperty,
    PropertyInput, QuadratureSpec, TableEntry, TailStrategy,
};

fn k(v: f64) -> KappaParam {
    KappaParam::new(v).unwrap()
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn table_rows_mpmath() {
    // mpmath quad of ∫ f(t) exp(−2 asinh(0.3t)/0.3) dt
    let kp = k(0.3);
    let cases = [
        (TableEntry::Heaviside { tau: 0.5 }, 0.195_236_188_181_348_43),
        (TableEntry::Power { nu: 2.5 }, 0.275_378_986_126_663_77),
        (TableEntry::OddMonomial { m: 2 }, 0.643_887_362_637_362_64),
        (TableEntry::EvenMonomial { m: 1 }, 0.320_695_267_339_592_24),
        (TableEntry::Dirac { tau: 0.7 }, 0.249_097_971_392_614_95),
    ];
    for (e, want) in cases {
        let got = laplace_table(e, 2.0, kp).unwrap();
        assert!(rel(got, want) < 1e-13, "{e:?}: {got} vs {want}");
    }
}

#[test]
fn spec_examples() {
    let one = |_: f64| 1.0;
    let id = |t: f64| t;
    let r = laplace_kappa(&one, 1.0, k(0.5), GrowthBound::new(1.0), &spec()).unwrap();
    assert!((r.value - 4.0 / 3.0).abs() < 1e-10 && r.converged);
    let r = laplace_kappa(&id, 2.0, k(0.5), GrowthBound::new(2.0), &spec()).unwrap();
    assert!((r.value - 1.0 / 3.0).abs() < 1e-10);
    let r = laplace_kappa(&one, 3.0, KappaParam::ZERO, GrowthBound::new(1.0), &spec()).unwrap();
    assert!((r.value - 1.0 / 3.0).abs() < 1e-12);
    let p = laplace_table(TableEntry::Power { nu: 2.0 }, 2.0, k(0.5)).unwrap();
    assert!((p - 1.0 / 3.0).abs() < 1e-15);
    let o = laplace_table(TableEntry::OddMonomial { m: 1 }, 2.0, k(0.5)).unwrap();
    assert!((o - 1.0 / 3.0).abs() < 1e-15);
    let d = laplace_table(TableEntry::Dirac { tau: 1.0 }, 1.7, k(0.4)).unwrap();
    assert!(rel(d, exp_kappa(-1.0, k(0.4)).powf(1.7)) < 1e-14);
    assert_eq!(laplace_table(TableEntry::Power { nu: 1.0 }, 1.0, KappaParam::ZERO).unwrap(), 1.0);
}

#[test]
fn guard_violations() {
    let one = |_: f64| 1.0;
    match laplace_kappa(&one, 0.4, k(0.5), GrowthBound::new(2.0), &spec()) {
        Err(KappaError::Guard { s, bound }) => assert_eq!((s, bound), (0.4, 1.0)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        laplace_table(TableEntry::EvenMonomial { m: 1 }, 1.5, k(0.5)),
        Err(KappaError::Guard { .. })
    ));
    assert!(matches!(
        laplace_table(TableEntry::Power { nu: -1.0 }, 1.5, k(0.5)),
        Err(KappaError::Domain { .. })
    ));
    assert!(laplace_table(TableEntry::Dirac { tau: 2.0 }, -3.0, k(0.5)).is_ok());
}

fn grid_entries() -> Vec<TableEntry> {
    vec![
        TableEntry::Heaviside { tau: 0.0 },
        TableEntry::Heaviside { tau: 1.3 },
        TableEntry::Power { nu: 0.5 },
        TableEntry::Power { nu: 2.5 },
        TableEntry::OddMonomial { m: 1 },
        TableEntry::OddMonomial { m: 2 },
        TableEntry::EvenMonomial { m: 0 },
        TableEntry::EvenMonomial { m: 2 },
    ]
}

#[test]
fn table_matches_quadrature_grid() {
    for kv in [0.1, 0.3, 0.5] {
        let kp = k(kv);
        for e in grid_entries() {
            let a = e.growth().abscissa(kp);
            for ds in [0.5, 1.5, 3.0] {
                let s = a + ds;
                let want = laplace_table(e, s, kp).unwrap();
                let f = |t: f64| e.original(t).unwrap();
                let got = laplace_kappa_from(&f, e.support_start(), s, kp, e.growth(), &spec()).unwrap();
                assert!(
                    (got.value - want).abs() <= 1e-8f64.max(1e-6 * want.abs()),
                    "{e:?} s={s} κ={kv}: {} vs {want}",
                    got.value
                );
            }
        }
    }
}

#[test]
fn exponential_map_tail_agrees() {
    let kp = k(0.3);
    let e = TableEntry::Power { nu: 1.5 };
    let f = |t: f64| e.original(t).unwrap();
    let sp = spec().with_tail(TailStrategy::ExponentialMap);
    let got = laplace_kappa(&f, 2.0, kp, e.growth(), &sp).unwrap();
    let want = laplace_table(e, 2.0, kp).unwrap();
    assert!(rel(got.value, want) < 1e-7, "{} {want}", got.value);
}

#[test]
fn dirac_row_from_heaviside_quadrature() {
    // δ(t − τ) = −d/dτ u(t − τ); Richardson-combined central differences
    let one = |_: f64| 1.0;
    for (kv, s, tau) in [(0.3, 2.0, 0.7), (0.5, 1.2, 2.0), (0.1, 4.0, 0.25)] {
        let kp = k(kv);
        let h_of = |tau: f64| {
            laplace_kappa_from(&one, tau, s, kp, GrowthBound::new(1.0), &spec()).unwrap().value
        };
        let d = |h: f64| -(h_of(tau + h) - h_of(tau - h)) / (2.0 * h);
        let h = 0.02;
        let est = (4.0 * d(h / 2.0) - d(h)) / 3.0;
        let want = laplace_table(TableEntry::Dirac { tau }, s, kp).unwrap();
        assert!(rel(est, want) < 1e-6, "{est} vs {want}");
    }
}

#[test]
fn power_row_printed_forms_agree() {
    for kv in [1e-6, 0.1, 0.3, 0.5] {
        for nu in [0.5, 1.0, 2.5, 4.0] {
            let kp = k(kv);
            let s = kv * nu + 0.7;
            let (a, b) = power_row_forms(nu, s, kp).unwrap();
            assert!(rel(a, b) < 1e-11, "ν={nu} κ={kv}: {a} vs {b}");
        }
    }
}

#[test]
fn complex_table_matches_real_axis() {
    let kp = k(0.3);
    for e in grid_entries().into_iter().chain([TableEntry::Dirac { tau: 0.4 }]) {
        let s = e.growth().abscissa(kp).max(0.0) + 1.1;
        let r = laplace_table(e, s, kp).unwrap();
        let c = laplace_table_complex(e, s.into(), kp).unwrap();
        assert!(rel(c.re, r) < 1e-12 && c.im.abs() < 1e-12 * r.abs(), "{e:?}");
    }
}

#[test]
fn degenerate_kappa_matches_classical() {
    let kp = k(1e-10);
    let s = 1.7f64;
    let classical = [
        (TableEntry::Heaviside { tau: 0.6 }, (-s * 0.6).exp() / s),
        (TableEntry::Power { nu: 2.5 }, 1.329_340_388_179_137 / s.powf(2.5)),
        (TableEntry::OddMonomial { m: 2 }, 6.0 / s.powi(4)),
        (TableEntry::EvenMonomial { m: 1 }, 2.0 / s.powi(3)),
        (TableEntry::Dirac { tau: 0.6 }, (-s * 0.6).exp()),
    ];
    for (e, want) in classical {
        let got = laplace_table(e, s, kp).unwrap();
        assert!(rel(got, want) < 1e-7, "{e:?}");
    }
    let one = |_: f64| 1.0;
    let q = laplace_kappa(&one, s, kp, GrowthBound::new(1.0), &spec()).unwrap();
    assert!(rel(q.value, 1.0 / s) < 1e-7);
}

#[test]
fn convolution_examples() {
    let one = |_: f64| 1.0;
    assert_eq!(kappa_convolution(&one, &one, 0.0, k(0.3), &spec()).unwrap().value, 0.0);
    let c = kappa_convolution(&one, &one, 2.0, KappaParam::ZERO, &spec()).unwrap();
    assert!((c.value - 2.0).abs() < 1e-14);
    // mpmath: ∫_0^1.3 τ √(1+κ²(t⊖τ)²)/√(1+κ²t²) dτ at κ = 0.3
    let id = |t: f64| t;
    let c = kappa_convolution(&one, &id, 1.3, k(0.3), &spec()).unwrap();
    assert!(rel(c.value, 0.796_532_854_704_672_36) < 1e-13, "{}", c.value);
}

#[test]
fn convolution_theorem() {
    let one = |_: f64| 1.0;
    let id = |t: f64| t;
    let pairs: [(&dyn Fn(f64) -> f64, f64, &dyn Fn(f64) -> f64, f64); 3] =
        [(&one, 1.0, &one, 1.0), (&one, 1.0, &id, 2.0), (&id, 2.0, &id, 2.0)];
    for kv in [0.2, 0.5] {
        let kp = k(kv);
        let s = 2.0 * (1.0 + kv * 2.0);
        for (f, nf, g, ng) in pairs {
            let conv = |t: f64| kappa_convolution(f, g, t, kp, &spec()).unwrap().value;
            let lhs = laplace_kappa(&conv, s, kp, GrowthBound::new(nf + ng), &spec()).unwrap().value;
            let ff = laplace_kappa(f, s, kp, GrowthBound::new(nf), &spec()).unwrap().value;
            let gg = laplace_kappa(g, s, kp, GrowthBound::new(ng), &spec()).unwrap().value;
            assert!(rel(lhs, ff * gg) < 1e-6, "κ={kv}: {lhs} vs {}", ff * gg);
        }
    }
    // f = g = 1, κ = 0.3, s = 2 against the squared Heaviside row
    let kp = k(0.3);
    let conv = |t: f64| kappa_convolution(&one, &one, t, kp, &spec()).unwrap().value;
    let lhs = laplace_kappa(&conv, 2.0, kp, GrowthBound::new(2.0), &spec()).unwrap().value;
    assert!(rel(lhs, (2.0f64 / 3.91).powi(2)) < 1e-6);
}

#[test]
fn convolution_algebra() {
    let kp = k(0.4);
    let f = |t: f64| (0.5 * t).sin() + 1.0;
    let g = |t: f64| t * t;
    let h = |t: f64| (-t).exp();
    for t in [0.3, 1.0, 2.5, 6.0] {
        let fg = kappa_convolution(&f, &g, t, kp, &spec()).unwrap().value;
        let gf = kappa_convolution(&g, &f, t, kp, &spec()).unwrap().value;
        assert!((fg - gf).abs() < 1e-8 * fg.abs().max(1.0));
        let sum = |x: f64| 2.0 * g(x) - 3.0 * h(x);
        let lin = kappa_convolution(&f, &sum, t, kp, &spec()).unwrap().value;
        let fh = kappa_convolution(&f, &h, t, kp, &spec()).unwrap().value;
        assert!((lin - (2.0 * fg - 3.0 * fh)).abs() < 1e-8 * lin.abs().max(1.0));
    }
}

#[test]
fn property_rows() {
    let one = |_: f64| 1.0;
    let id = |t: f64| t;
    let d_id = |_: f64| 1.0;
    let zero = |_: f64| 0.0;
    let sp = spec();

    let input = PropertyInput::new(&one, GrowthBound::new(2.0)).with_g(&id);
    let c = laplace_property_check(LaplaceProperty::Linearity { a: 2.0, b: 3.0 }, &input, 2.5, k(0.4), &sp)
        .unwrap();
    assert!(c.passes(1e-9), "{c:?}");

    let input = PropertyInput::new(&one, GrowthBound::new(1.0));
    let c = laplace_property_check(LaplaceProperty::Scaling { a: 2.0 }, &input, 3.0, k(0.4), &sp).unwrap();
    assert!(c.passes(1e-7), "{c:?}");
    // (1/2) F_{0.2}(1.5) with F the Heaviside row at τ = 0
    assert!(rel(c.rhs, 0.5 * 1.5 / (1.5 * 1.5 - 0.04)) < 1e-9);

    let c = laplace_property_check(LaplaceProperty::Modulation { a: 1.0 }, &input, 2.0, k(0.3), &sp).unwrap();
    assert!(c.passes(1e-8), "{c:?}");
    assert!(rel(c.rhs, 1.0 / (1.0 - 0.09)) < 1e-9);

    for (f, df, nu) in [
        (&id as &dyn Fn(f64) -> f64, &d_id as &dyn Fn(f64) -> f64, 2.0),
        (&one, &zero, 1.0),
    ] {
        let input = PropertyInput::new(f, GrowthBound::new(nu)).with_derivative(df);
        for p in [LaplaceProperty::Derivative, LaplaceProperty::WeightedDerivative] {
            let c = laplace_property_check(p, &input, 2.0, k(0.35), &sp).unwrap();
            assert!(c.passes(1e-6), "{p:?}: {c:?}");
        }
    }

    // f = exp_κ(−t)^{s0}, a decaying original
    let kp = k(0.35);
    let f = move |t: f64| exp_kappa(-t, kp).powf(1.5);
    let df = move |t: f64| -1.5 * f(t) / (0.35 * t).hypot(1.0);
    let input = PropertyInput::new(&f, GrowthBound::new(1.0 - 1.5 / 0.35)).with_derivative(&df);
    for p in [LaplaceProperty::Derivative, LaplaceProperty::WeightedDerivative, LaplaceProperty::WeightedIntegral] {
        let c = laplace_property_check(p, &input, 1.0, kp, &sp).unwrap();
        assert!(c.passes(1e-6), "{p:?}: {c:?}");
    }

    let input = PropertyInput::new(&id, GrowthBound::new(2.0));
    for p in [
        LaplaceProperty::WeightedIntegral,
        LaplaceProperty::LogMultiplication { n: 1 },
        LaplaceProperty::LogMultiplication { n: 2 },
        LaplaceProperty::LogDivision,
    ] {
        let c = laplace_property_check(p, &input, 2.0, k(0.3), &sp).unwrap();
        assert!(c.passes(1e-6), "{p:?}: {c:?}");
    }
}

#[test]
fn property_preconditions() {
    let one = |_: f64| 1.0;
    let input = PropertyInput::new(&one, GrowthBound::new(1.0));
    let sp = spec();
    for p in [
        LaplaceProperty::Linearity { a: 1.0, b: 1.0 },
        LaplaceProperty::Derivative,
        LaplaceProperty::LogDivision,
        LaplaceProperty::LogMultiplication { n: 3 },
        LaplaceProperty::Scaling { a: -1.0 },
    ] {
        assert!(
            matches!(laplace_property_check(p, &input, 2.0, k(0.3), &sp), Err(KappaError::Precondition(_))),
            "{p:?}"
        );
    }
    assert!(matches!(
        laplace_property_check(LaplaceProperty::Modulation { a: 1.8 }, &input, 2.0, k(0.3), &sp),
        Err(KappaError::Guard { .. })
    ));
}

#[test]
fn limit_values() {
    let sp = spec();
    let one = |_: f64| 1.0;
    for kv in [0.2, 0.4] {
        let iv = initial_value(&one, k(kv), GrowthBound::new(1.0), &sp).unwrap();
        assert!((iv - 1.0).abs() < 1e-6, "{iv}");
    }
    let kp = k(0.4);
    // [exp_κ(−t)]^r = exp_{κ/r}(−rt) keeps the far tail from underflowing
    let f = move |t: f64| exp_kappa(-0.4 * t, k(1.0));
    let fv = final_value(&f, kp, GrowthBound::new(0.0), &sp).unwrap();
    assert!((fv - 0.5).abs() < 1e-4, "{fv}");
    // contract: |κ| t f(t) → 1/2
    assert!((0.4 * 1e8 * f(1e8) - 0.5).abs() < 1e-6);
    let iv = initial_value(&f, kp, GrowthBound::new(0.0), &sp).unwrap();
    assert!((iv - 1.0).abs() < 1e-6);

    let g = move |t: f64| exp_kappa(-0.8 * t, k(0.5));
    let fv = final_value(&g, kp, GrowthBound::new(-1.0), &sp).unwrap();
    assert!(fv.abs() < 1e-4, "{fv}");

    assert!(matches!(final_value(&one, kp, GrowthBound::new(1.0), &sp), Err(KappaError::Guard { .. })));
    // a √t start is not polynomial in 1/s, so the ladder cannot settle
    let root = |t: f64| 1.0 + t.sqrt();
    assert!(matches!(
        initial_value(&root, kp, GrowthBound::new(1.5), &sp),
        Err(KappaError::LimitUndetermined(_))
    ));
}

#[test]
fn bessel_kernel() {
    for (s, m) in [(0.0, 2), (1.0, 2), (2.0, 3), (0.5, 1), (3.0, 4)] {
        let c = bessel_kernel_check(s, m, &spec()).unwrap();
        assert!(c.residual < 1e-8, "s={s} m={m}: {c:?}");
    }
    let c = bessel_kernel_check(1.0, 2, &spec()).unwrap();
    assert!((c.reference - 1.0 / 2.618_033_988_749_895).abs() < 1e-15);
}

#[test]
fn inverse_round_trips() {
    let sp = spec();
    let kp = k(0.3);
    let odd = TableEntry::OddMonomial { m: 1 };
    let f = |s: num_complex::Complex64| laplace_table_complex(odd, s, kp).unwrap();
    let r = inverse_laplace_kappa(&f, 1.0, kp, 1.5, &sp).unwrap();
    assert!((r.value - 1.0).abs() < 1e-6, "{r:?}");

    let heav = TableEntry::Heaviside { tau: 0.0 };
    let f = |s: num_complex::Complex64| laplace_table_complex(heav, s, kp).unwrap();
    let r = inverse_laplace_kappa(&f, 2.0, kp, 1.0, &sp).unwrap();
    assert!((r.value - 1.0).abs() < 1e-6, "{r:?}");

    let pw = TableEntry::Power { nu: 2.5 };
    let f = |s: num_complex::Complex64| laplace_table_complex(pw, s, kp).unwrap();
    let r = inverse_laplace_kappa(&f, 1.7, kp, 1.5, &sp).unwrap();
    assert!((r.value - 1.7f64.powf(1.5)).abs() < 1e-3, "{r:?}");

    let f = |s: num_complex::Complex64| 1.0 / (s * s);
    let r = inverse_laplace_kappa(&f, 3.0, KappaParam::ZERO, 0.5, &sp).unwrap();
    assert!((r.value - 3.0).abs() < 1e-6, "{r:?}");
}
