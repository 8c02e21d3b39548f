use kappa_core::{
    exp_kappa, kappa_entropy, kappa_entropy_discrete, kappa_statistical_weight, stationarity_residual,
    tail_exponent_fit, DiscreteDistribution, KappaError, KappaParam, QuadratureSpec, StatParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn k(v: f64) -> KappaParam {
    KappaParam::new(v).unwrap()
}

fn gauss(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

#[test]
fn gaussian_entropy() {
    let sp = QuadratureSpec::default();
    let inf = f64::INFINITY;
    // mpmath quad over the real line
    let s = kappa_entropy(&gauss, -inf, inf, k(0.3), &sp).unwrap();
    assert!((s.value - 1.514_821_727_360_497).abs() < 1e-10, "{s:?}");
    let s0 = kappa_entropy(&gauss, -inf, inf, KappaParam::ZERO, &sp).unwrap().value;
    assert!((s0 - 1.418_938_533_204_672_7).abs() < 1e-10);
    let s1 = kappa_entropy(&gauss, -inf, inf, k(1e-2), &sp).unwrap().value;
    assert!((s1 - 1.419_038_294_846_075_4).abs() < 1e-10);
    // the gap to Shannon shrinks like κ²
    let s2 = kappa_entropy(&gauss, -inf, inf, k(1e-4), &sp).unwrap().value;
    let ratio = (s1 - s0) / (s2 - s0);
    assert!((ratio / 1e4 - 1.0).abs() < 1e-3, "{ratio}");
    // the same integral on a truncated domain
    let t = kappa_entropy(&gauss, -12.0, 12.0, k(0.3), &sp).unwrap().value;
    assert!((t - s.value).abs() < 1e-10);
}

#[test]
fn stationarity_over_kappa_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = |x: f64| 2.0 * x.sin() - 0.5 * x;
    for i in 1..=9 {
        let kp = k(i as f64 / 10.0);
        for _ in 0..20 {
            let x = rng.gen_range(-4.0..4.0);
            let r = stationarity_residual(&g, x, kp).unwrap();
            assert!(r < 1e-6, "κ={} x={x}: {r}", kp.value());
        }
    }
    let r = stationarity_residual(&g, 1.3, KappaParam::ZERO).unwrap();
    assert!(r < 1e-6);
}

#[test]
fn uniform_is_maximal() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for kv in [0.0, 0.3, 0.7] {
        let kp = k(kv);
        let top = kappa_entropy_discrete(&DiscreteDistribution::uniform(8).unwrap(), kp).unwrap();
        for _ in 0..1000 {
            let w: Vec<f64> = (0..8).map(|_| rng.gen::<f64>()).collect();
            let d = DiscreteDistribution::normalized(w).unwrap();
            assert!(kappa_entropy_discrete(&d, kp).unwrap() <= top);
        }
    }
}

#[test]
fn expandability() {
    let kp = k(0.45);
    let d = DiscreteDistribution::new(vec![0.1, 0.2, 0.3, 0.4]).unwrap();
    let e = DiscreteDistribution::new(vec![0.1, 0.2, 0.3, 0.4, 0.0]).unwrap();
    assert_eq!(kappa_entropy_discrete(&d, kp).unwrap(), kappa_entropy_discrete(&e, kp).unwrap());
}

#[test]
fn shannon_limit() {
    let d = DiscreteDistribution::new(vec![0.5, 0.25, 0.125, 0.125]).unwrap();
    let shannon: f64 = d.weights().iter().map(|p| -p * p.ln()).sum();
    let s = kappa_entropy_discrete(&d, k(1e-10)).unwrap();
    assert!((s - shannon).abs() < 1e-7);
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
}

#[test]
fn tail_exponents() {
    let e = log_grid(1e2, 1e4, 41);
    for kv in [0.25, 0.5] {
        let p = StatParams::new(1.0, 0.0, k(kv)).unwrap();
        let f: Vec<f64> = e.iter().map(|&x| kappa_statistical_weight(x, &p)).collect();
        let slope = tail_exponent_fit(&e, &f).unwrap();
        assert!((slope * kv + 1.0).abs() < 0.02, "κ={kv}: {slope}");
        // independent two-point estimate on the same data
        let two = (f[40] / f[30]).ln() / (e[40] / e[30]).ln();
        assert!((slope - two).abs() < 1e-3 * two.abs());
    }
}

#[test]
fn tail_fit_rejects_bad_data() {
    let e = log_grid(1e2, 1e4, 41);
    let f: Vec<f64> = e.iter().map(|&x| (-x).exp()).collect();
    assert!(matches!(tail_exponent_fit(&e, &f), Err(KappaError::Fit(_))));
    let short = log_grid(1.0, 5.0, 20);
    let f: Vec<f64> = short.iter().map(|&x| exp_kappa(-x, k(0.5))).collect();
    assert!(matches!(tail_exponent_fit(&short, &f), Err(KappaError::Fit(_))));
    assert!(matches!(tail_exponent_fit(&e[..5], &e[..5]), Err(KappaError::Fit(_))));
}
