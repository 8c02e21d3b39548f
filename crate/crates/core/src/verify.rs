//! Seeded verification suites: every identity becomes a check with a
//! residual, a tolerance and a verdict.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{deform_inv, deform_map, kappa_diff, kappa_inverse, kappa_nfold_sum, kappa_prod, kappa_sum, kappa_unit};
use crate::calculus::{kappa_derivative, kappa_derivative_with, kappa_integral, kinetic_energy, Measure};
use crate::error::{KappaError, Result};
use crate::functions::{
    deformation_constants, exp_kappa, exp_kappa_taylor, kappa_factorial, ln_kappa, XiPolynomialTable,
};
use crate::gamma::{
    gamma_kappa, gamma_kappa_mellin_integral, ln_kappa_gamma_integral, mellin_kappa,
    mellin_kappa_incomplete_closed, mellin_kappa_incomplete_quadrature,
};
use crate::laplace::{
    bessel_kernel_check, final_value, inverse_laplace_kappa, kappa_convolution, laplace_kappa,
    laplace_kappa_from, laplace_property_check, laplace_table, laplace_table_complex, GrowthBound,
    LaplaceProperty, PropertyInput, TableEntry,
};
use crate::param::{DeformKind, KappaParam};
use crate::quadrature::{integrate, QuadratureSpec};
use crate::special::gamma;
use crate::stat::{
    kappa_entropy, kappa_entropy_discrete, kappa_statistical_weight, stationarity_residual,
    tail_exponent_fit, DiscreteDistribution, StatParams,
};
use crate::trig::{inverse_trig_kappa, trig_kappa, TrigSelector};

const HYP: DeformKind = DeformKind::Hyperbolic;
const CYC: DeformKind = DeformKind::Cyclic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Algebra,
    Functions,
    Calculus,
    Trig,
    Laplace,
    Stat,
    All,
}

impl Suite {
    pub const MODULES: [Suite; 6] = [
        Suite::Algebra,
        Suite::Functions,
        Suite::Calculus,
        Suite::Trig,
        Suite::Laplace,
        Suite::Stat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Functions => "functions",
            Suite::Calculus => "calculus",
            Suite::Trig => "trig",
            Suite::Laplace => "laplace",
            Suite::Stat => "stat",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = KappaError;
    fn from_str(s: &str) -> Result<Self> {
        Suite::MODULES
            .into_iter()
            .chain([Suite::All])
            .find(|m| m.name() == s)
            .ok_or_else(|| KappaError::Input(format!("unknown suite {s:?}")))
    }
}

/// Strict uses the stated tolerances; the default profile is 10× looser.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ToleranceProfile {
    Strict,
    #[default]
    Default,
}

impl ToleranceProfile {
    fn factor(self) -> f64 {
        match self {
            ToleranceProfile::Strict => 1.0,
            ToleranceProfile::Default => 10.0,
        }
    }
}

impl FromStr for ToleranceProfile {
    type Err = KappaError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(ToleranceProfile::Strict),
            "default" => Ok(ToleranceProfile::Default),
            _ => Err(KappaError::Input(format!("unknown tolerance profile {s:?}"))),
        }
    }
}

/// One verified identity.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub suite: Suite,
    pub anchor: String,
    /// Worst residual seen; +∞ if an evaluation failed.
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Error text when an evaluation failed.
    pub note: Option<String>,
}

struct Recorder {
    suite: Suite,
    factor: f64,
    reports: Vec<CheckReport>,
}

impl Recorder {
    fn push(&mut self, anchor: &str, tolerance: f64, outcome: Result<f64>, expect_exceed: bool) {
        let (residual, note) = match outcome {
            Ok(r) if r.is_nan() => (f64::INFINITY, Some("residual is NaN".to_string())),
            Ok(r) => (r, None),
            Err(e) => (f64::INFINITY, Some(e.to_string())),
        };
        let pass = note.is_none() && if expect_exceed { residual > tolerance } else { residual <= tolerance };
        self.reports.push(CheckReport {
            suite: self.suite,
            anchor: anchor.to_string(),
            residual,
            tolerance,
            pass,
            note,
        });
    }

    /// Passes when the residual stays within `tol` (scaled by the profile).
    fn check(&mut self, anchor: &str, tol: f64, f: impl FnOnce() -> Result<f64>) {
        let t = tol * self.factor;
        self.push(anchor, t, f(), false);
    }

    /// Passes when the residual exceeds `threshold`: an identity that must fail.
    fn check_fails(&mut self, anchor: &str, threshold: f64, f: impl FnOnce() -> Result<f64>) {
        self.push(anchor, threshold, f(), true);
    }
}

fn rel(a: f64, b: f64) -> f64 {
    rel_scaled(a, b, 0.0)
}

/// |a − b| / max(|a|, |b|, scale); NaN if either side is not finite.
fn rel_scaled(a: f64, b: f64, scale: f64) -> f64 {
    if !(a.is_finite() && b.is_finite()) {
        return f64::NAN;
    }
    let d = a.abs().max(b.abs()).max(scale);
    if d == 0.0 {
        0.0
    } else {
        (a - b).abs() / d
    }
}

/// Running maximum that keeps NaN sticky.
fn worst(acc: &mut f64, r: f64) {
    if r.is_nan() || acc.is_nan() {
        *acc = f64::NAN;
    } else if r > *acc {
        *acc = r;
    }
}

fn kp(v: f64) -> KappaParam {
    KappaParam::new(v).expect("finite kappa")
}

fn rng_for(seed: u64, suite: Suite) -> ChaCha8Rng {
    let idx = Suite::MODULES.iter().position(|&s| s == suite).unwrap_or(0) as u64;
    ChaCha8Rng::seed_from_u64(seed ^ (idx.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

/// Number of random samples per identity in the algebra suite.
pub const ALGEBRA_SAMPLES: usize = 10_000;

/// Runs one suite (or all of them) with a deterministic seed.
pub fn run_suite(suite: Suite, seed: u64, profile: ToleranceProfile) -> Vec<CheckReport> {
    if suite == Suite::All {
        // each suite owns its RNG, so running them in parallel changes nothing
        return std::thread::scope(|scope| {
            let handles: Vec<_> = Suite::MODULES
                .into_iter()
                .map(|s| scope.spawn(move || run_suite(s, seed, profile)))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("verification suite panicked"))
                .collect()
        });
    }
    let mut rec = Recorder {
        suite,
        factor: profile.factor(),
        reports: Vec::new(),
    };
    let mut rng = rng_for(seed, suite);
    match suite {
        Suite::Algebra => algebra_suite(&mut rec, &mut rng),
        Suite::Functions => functions_suite(&mut rec, &mut rng),
        Suite::Calculus => calculus_suite(&mut rec, &mut rng),
        Suite::Trig => trig_suite(&mut rec, &mut rng),
        Suite::Laplace => laplace_suite(&mut rec, &mut rng),
        Suite::Stat => stat_suite(&mut rec, &mut rng),
        Suite::All => unreachable!(),
    }
    rec.reports
}

fn algebra_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let n = ALGEBRA_SAMPLES;
    let mut group = Vec::with_capacity(n);
    let mut field = Vec::with_capacity(n);
    for _ in 0..n {
        let k = kp(rng.gen_range(1e-6..0.999));
        group.push((k, rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)));
        field.push((k, rng.gen_range(0.1..5.0), rng.gen_range(0.1..5.0), rng.gen_range(0.1..5.0)));
    }
    let sum = |x, y, k| kappa_sum(x, y, k, HYP);
    let prod = |x, y, k| kappa_prod(x, y, k, HYP);

    rec.check("kappa-sum associativity", 1e-12, || {
        let mut m = 0.0;
        for &(k, x, y, z) in &group {
            let a = sum(sum(x, y, k)?, z, k)?;
            let b = sum(x, sum(y, z, k)?, k)?;
            worst(&mut m, rel_scaled(a, b, x.abs().max(y.abs()).max(z.abs())));
        }
        Ok(m)
    });
    rec.check("kappa-sum commutativity", 1e-12, || {
        let mut m = 0.0;
        for &(k, x, y, _) in &group {
            worst(&mut m, rel(sum(x, y, k)?, sum(y, x, k)?));
        }
        Ok(m)
    });
    rec.check("kappa-sum neutral element 0", 1e-12, || {
        let mut m = 0.0;
        for &(k, x, _, _) in &group {
            worst(&mut m, rel(sum(x, 0.0, k)?, x));
        }
        Ok(m)
    });
    rec.check("kappa-sum opposite element -x", 1e-12, || {
        let mut m = 0.0;
        for &(k, x, _, _) in &group {
            worst(&mut m, sum(x, -x, k)?.abs() / x.abs().max(1.0));
        }
        Ok(m)
    });
    rec.check("kappa-product associativity", 1e-11, || {
        let mut m = 0.0;
        for &(k, x, y, z) in &field {
            worst(&mut m, rel(prod(prod(x, y, k)?, z, k)?, prod(x, prod(y, z, k)?, k)?));
        }
        Ok(m)
    });
    rec.check("kappa-product commutativity", 1e-11, || {
        let mut m = 0.0;
        for &(k, x, y, _) in &field {
            worst(&mut m, rel(prod(x, y, k)?, prod(y, x, k)?));
        }
        Ok(m)
    });
    rec.check("kappa-product unit element I", 1e-11, || {
        let mut m = 0.0;
        for &(k, x, _, _) in &field {
            worst(&mut m, rel(prod(x, kappa_unit(k, HYP), k)?, x));
        }
        Ok(m)
    });
    rec.check("kappa-product inverse element", 1e-11, || {
        let mut m = 0.0;
        for &(k, x, _, _) in &field {
            let inv = kappa_inverse(x, k, HYP)?;
            worst(&mut m, rel(prod(x, inv, k)?, kappa_unit(k, HYP)));
        }
        Ok(m)
    });
    rec.check("kappa-product distributes over kappa-sum", 1e-11, || {
        let mut m = 0.0;
        for &(k, x, y, z) in &field {
            let a = prod(x, sum(y, z, k)?, k)?;
            let b = sum(prod(x, y, k)?, prod(x, z, k)?, k)?;
            worst(&mut m, rel(a, b));
        }
        Ok(m)
    });
    rec.check("isomorphism {x (+) y} = {x} + {y}", 1e-12, || {
        let mut m = 0.0;
        for &(k, x, y, _) in &group {
            let a = deform_map(sum(x, y, k)?, k, HYP)?;
            let (bx, by) = (deform_map(x, k, HYP)?, deform_map(y, k, HYP)?);
            worst(&mut m, rel_scaled(a, bx + by, bx.abs().max(by.abs())));
        }
        Ok(m)
    });
    rec.check("isomorphism {x (x) y} = {x}{y}", 1e-12, || {
        let mut m = 0.0;
        for &(k, x, y, _) in &field {
            let a = deform_map(prod(x, y, k)?, k, HYP)?;
            worst(&mut m, rel(a, deform_map(x, k, HYP)? * deform_map(y, k, HYP)?));
        }
        Ok(m)
    });
    rec.check("isomorphism [a + b] = [a] (+) [b]", 1e-12, || {
        let mut m = 0.0;
        for &(k, x, y, _) in &group {
            let (a, b) = (deform_map(x, k, HYP)?, deform_map(y, k, HYP)?);
            let lhs = deform_inv(a + b, k, HYP)?;
            let rhs = sum(deform_inv(a, k, HYP)?, deform_inv(b, k, HYP)?, k)?;
            worst(&mut m, rel_scaled(lhs, rhs, x.abs().max(y.abs())));
        }
        Ok(m)
    });
    rec.check("isomorphism [ab] = [a] (x) [b]", 1e-12, || {
        let mut m = 0.0;
        for &(k, x, y, _) in &field {
            let (a, b) = (deform_map(x, k, HYP)?, deform_map(y, k, HYP)?);
            let lhs = deform_inv(a * b, k, HYP)?;
            let rhs = prod(deform_inv(a, k, HYP)?, deform_inv(b, k, HYP)?, k)?;
            worst(&mut m, rel(lhs, rhs));
        }
        Ok(m)
    });
    rec.check("kappa-sum at kappa = 1e-12 is ordinary +", 1e-12, || {
        let k = kp(1e-12);
        let mut m = 0.0;
        for &(_, x, y, _) in group.iter().take(1000) {
            worst(&mut m, rel_scaled(sum(x, y, k)?, x + y, x.abs().max(y.abs())));
        }
        Ok(m)
    });
    rec.check("cyclic isomorphism on the restricted domain", 1e-12, || {
        let mut m = 0.0;
        for &(k, _, _, _) in group.iter().take(2000) {
            let lim = std::f64::consts::FRAC_PI_4 / k.value();
            let (u, v) = (rng.gen_range(-lim..lim), rng.gen_range(-lim..lim));
            let (x, y) = (deform_inv(u, k, CYC)?, deform_inv(v, k, CYC)?);
            let s = deform_map(kappa_sum(x, y, k, CYC)?, k, CYC)?;
            worst(&mut m, rel_scaled(s, u + v, u.abs().max(v.abs())));
            let (pu, pv) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let (px, py) = (deform_inv(pu, k, CYC)?, deform_inv(pv, k, CYC)?);
            let p = deform_map(kappa_prod(px, py, k, CYC)?, k, CYC)?;
            worst(&mut m, rel_scaled(p, pu * pv, 1e-3));
        }
        Ok(m)
    });
}

/// ξ_n from the explicit products, for n ≤ 8.
fn xi_explicit(n: u32, k: f64) -> f64 {
    let f = |m: f64| 1.0 - m * m * k * k;
    match n {
        0..=2 => 1.0,
        3 => f(1.0),
        4 => f(2.0),
        5 => f(1.0) * f(3.0),
        6 => f(2.0) * f(4.0),
        7 => f(1.0) * f(3.0) * f(5.0),
        8 => f(2.0) * f(4.0) * f(6.0),
        _ => f64::NAN,
    }
}

fn functions_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let spec = QuadratureSpec::default();
    let kappas: Vec<KappaParam> = (0..200).map(|_| kp(rng.gen_range(1e-6..0.95))).collect();

    rec.check("exp_0.5(1) = 2.618034", 1e-6, || Ok((exp_kappa(1.0, kp(0.5)) - 2.618_034).abs()));
    rec.check("ln_0.5(4) = 1.5", 1e-12, || Ok((ln_kappa(4.0, kp(0.5))? - 1.5).abs()));
    rec.check("ln_kappa(exp_kappa(x)) = x on [-50, 50]", 1e-11, || {
        let mut m = 0.0;
        for &k in &kappas {
            let x = rng.gen_range(-50.0..50.0);
            worst(&mut m, rel_scaled(ln_kappa(exp_kappa(x, k), k)?, x, 1.0));
        }
        Ok(m)
    });
    rec.check("exp_kappa(ln_kappa(x)) = x on [1e-6, 1e6]", 1e-11, || {
        let mut m = 0.0;
        for &k in &kappas {
            let x = 10f64.powf(rng.gen_range(-6.0..6.0));
            worst(&mut m, rel(exp_kappa(ln_kappa(x, k)?, k), x));
        }
        Ok(m)
    });
    rec.check("exp_kappa(x) exp_kappa(y) = exp_kappa(x (+) y)", 1e-11, || {
        let mut m = 0.0;
        for &k in &kappas {
            let (x, y) = (rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
            let s = kappa_sum(x, y, k, HYP)?;
            worst(&mut m, rel(exp_kappa(x, k) * exp_kappa(y, k), exp_kappa(s, k)));
        }
        Ok(m)
    });
    rec.check("exp_kappa(-x)(2 kappa x)^(1/kappa) -> 1, error / (2/(kappa x))", 1.0, || {
        let mut m = 0.0;
        for kv in [0.2, 0.5, 0.8] {
            for x in [1e3, 1e4, 1e5] {
                let v = exp_kappa(-x, kp(kv)) * (2.0 * kv * x).powf(1.0 / kv);
                worst(&mut m, (v - 1.0).abs() * kv * x / 2.0);
            }
        }
        Ok(m)
    });
    rec.check("exp_kappa(x)^r = exp_(kappa/r)(r x)", 1e-11, || {
        let mut m = 0.0;
        for &k in kappas.iter().take(60) {
            for r in [0.5, 2.0, 3.0] {
                let x = rng.gen_range(-5.0..5.0);
                worst(&mut m, rel(exp_kappa(x, k).powf(r), exp_kappa(r * x, k.scaled(r)?)));
            }
        }
        Ok(m)
    });
    rec.check("ln_kappa(x^r) = r ln_(r kappa)(x)", 1e-11, || {
        let mut m = 0.0;
        for &k in kappas.iter().take(60) {
            for r in [0.5, 2.0, 3.0] {
                let x = 10f64.powf(rng.gen_range(-2.0..2.0));
                let rk = kp(r * k.value());
                worst(&mut m, rel_scaled(ln_kappa(x.powf(r), k)?, r * ln_kappa(x, rk)?, 1e-3));
            }
        }
        Ok(m)
    });
    rec.check("ln_kappa(xy) = ln_kappa(x) (+) ln_kappa(y)", 1e-11, || {
        let mut m = 0.0;
        for &k in &kappas {
            let (x, y) = (10f64.powf(rng.gen_range(-3.0..3.0)), 10f64.powf(rng.gen_range(-3.0..3.0)));
            let (lx, ly) = (ln_kappa(x, k)?, ln_kappa(y, k)?);
            let s = kappa_sum(lx, ly, k, HYP)?;
            worst(&mut m, rel_scaled(ln_kappa(x * y, k)?, s, lx.abs().max(ly.abs())));
        }
        Ok(m)
    });
    rec.check("ln_kappa(1/x) = -ln_kappa(x)", 1e-13, || {
        let mut m = 0.0;
        for &k in &kappas {
            let x = 10f64.powf(rng.gen_range(-3.0..3.0));
            worst(&mut m, rel_scaled(ln_kappa(1.0 / x, k)?, -ln_kappa(x, k)?, 1.0));
        }
        Ok(m)
    });
    rec.check("ln_kappa(x) 2 kappa x^(-kappa) -> 1", 1e-4, || {
        let mut m = 0.0;
        for kv in [0.2, 0.5, 0.8] {
            let x = 1e15;
            worst(&mut m, (ln_kappa(x, kp(kv))? * 2.0 * kv * x.powf(-kv) - 1.0).abs());
        }
        Ok(m)
    });
    rec.check("ln_kappa(x) = (1/2) int_{1/x}^x t^(-1-kappa) dt", 1e-9, || {
        let mut m = 0.0;
        for kv in [0.1, 0.4, 0.8] {
            let k = kp(kv);
            for x in [0.5f64, 2.0, 10.0, 100.0] {
                let closed = (x.powf(kv) - x.powf(-kv)) / (2.0 * kv);
                worst(&mut m, rel(closed, ln_kappa(x, k)?) / 1e3);
                let q = integrate(|t: f64| t.powf(-1.0 - kv), 1.0 / x, x, &spec).into_value("ln integral")?;
                worst(&mut m, rel(0.5 * q, ln_kappa(x, k)?));
            }
        }
        Ok(m)
    });
    rec.check("exp_kappa increasing and convex (violations on a grid)", 0.0, || {
        let mut bad = 0usize;
        for kv in [0.1, 0.5, 0.9] {
            let k = kp(kv);
            let v: Vec<f64> = (0..1000).map(|i| exp_kappa(-10.0 + 0.02 * i as f64, k)).collect();
            bad += v.windows(2).filter(|w| !(w[1] > w[0])).count();
            bad += v.windows(3).filter(|w| !(w[2] - 2.0 * w[1] + w[0] > 0.0)).count();
        }
        Ok(bad as f64)
    });
    rec.check("ln_kappa concave and x ln_kappa(x) convex (violations on a grid)", 0.0, || {
        let mut bad = 0usize;
        for kv in [0.1, 0.5, 0.9] {
            let k = kp(kv);
            let xs: Vec<f64> = (0..1000).map(|i| 0.1 + 0.01 * i as f64).collect();
            let l: Vec<f64> = xs.iter().map(|&x| ln_kappa(x, k)).collect::<Result<_>>()?;
            let xl: Vec<f64> = xs.iter().zip(&l).map(|(x, l)| x * l).collect();
            bad += l.windows(3).filter(|w| !(w[2] - 2.0 * w[1] + w[0] < 0.0)).count();
            bad += xl.windows(3).filter(|w| !(w[2] - 2.0 * w[1] + w[0] > 0.0)).count();
        }
        Ok(bad as f64)
    });
    rec.check("d/dx[x ln_kappa(x)] = ln_kappa(eps x)/gamma", 1e-7, || {
        let mut m = 0.0;
        for &k in kappas.iter().take(50) {
            let c = deformation_constants(k)?;
            let x = rng.gen_range(0.2..5.0);
            let f = |z: f64| z * ln_kappa(z, k).unwrap_or(f64::NAN);
            let d = crate::calculus::central_difference(&f, x)?;
            worst(&mut m, rel_scaled(d, ln_kappa(c.epsilon * x, k)? / c.gamma, 1.0));
            let d1 = crate::calculus::central_difference(&|z| ln_kappa(z, k).unwrap_or(f64::NAN), 1.0)?;
            worst(&mut m, (d1 - 1.0).abs());
            worst(&mut m, ln_kappa(1.0, k)?.abs());
        }
        Ok(m)
    });
    rec.check("xi_n table matches the explicit products (n <= 8)", 1e-14, || {
        let mut m = 0.0;
        for &k in kappas.iter().take(50) {
            let t = XiPolynomialTable::new(k, 8);
            for n in 0..=8 {
                let v = t.get(n).unwrap_or(f64::NAN);
                worst(&mut m, rel_scaled(v, xi_explicit(n, k.value()), 1.0));
            }
        }
        Ok(m)
    });
    rec.check("Taylor prefix 1 + x + x^2/2 + (1 - kappa^2) x^3/6", 1e-15, || {
        let mut m = 0.0;
        for &k in kappas.iter().take(50) {
            let want = [1.0, 1.0, 0.5, (1.0 - k.value() * k.value()) / 6.0];
            for (n, w) in want.iter().enumerate() {
                worst(&mut m, rel(1.0 / kappa_factorial(n as u32, k)?, *w));
            }
            let x = 1e-3;
            let t = exp_kappa_taylor(x, k, 3)?.value;
            let p = 1.0 + x + x * x / 2.0 + want[3] * x * x * x;
            worst(&mut m, rel(t, p));
        }
        Ok(m)
    });
    rec.check("gamma_kappa(1) = gamma_kappa(2) = 1, gamma_kappa(3) = 2", 1e-13, || {
        let mut m = 0.0;
        for kv in [0.1, 0.3, 0.5] {
            let k = kp(kv);
            worst(&mut m, (gamma_kappa(1.0, k)? - 1.0).abs());
            worst(&mut m, (gamma_kappa(2.0, k)? - 1.0).abs());
            worst(&mut m, (gamma_kappa(3.0, k)? - 2.0).abs() / 2.0);
        }
        Ok(m)
    });
    rec.check("mellin_kappa(1, 0.5) = 4/3", 1e-12, || Ok((mellin_kappa(1.0, kp(0.5))? - 4.0 / 3.0).abs()));
    rec.check("Mellin recursion M(r+2) = r(r+1)/(1 - kappa^2 (r+2)^2) M(r)", 1e-10, || {
        let mut m = 0.0;
        for kv in [0.1, 0.25] {
            let k = kp(kv);
            for r in [0.5, 1.0, 1.5] {
                let lhs = mellin_kappa(r + 2.0, k)?;
                let rhs = r * (r + 1.0) / (1.0 - kv * kv * (r + 2.0) * (r + 2.0)) * mellin_kappa(r, k)?;
                worst(&mut m, rel(lhs, rhs));
            }
        }
        Ok(m)
    });
    rec.check("incomplete Mellin closed forms r = 1, 2 vs quadrature", 1e-8, || {
        let mut m = 0.0;
        for _ in 0..12 {
            let k = kp(rng.gen_range(0.05..0.45));
            let x = rng.gen_range(0.1..20.0);
            for r in [1u32, 2] {
                let c = mellin_kappa_incomplete_closed(r, x, k)?;
                let q = mellin_kappa_incomplete_quadrature(r as f64, x, k, &spec).into_value("incomplete Mellin")?;
                worst(&mut m, rel(c, q));
            }
        }
        Ok(m)
    });
    rec.check("n!_kappa = (1 - kappa^2 n^2) n M(n) for n <= floor(1/kappa) - 1", 1e-10, || {
        let mut m = 0.0;
        for kv in [0.1, 0.15, 0.2, 0.3] {
            let k = kp(kv);
            let top = (1.0 / kv).floor() as u32 - 1;
            for n in 1..=top {
                let nf = n as f64;
                let rhs = (1.0 - kv * kv * nf * nf) * nf * mellin_kappa(nf, k)?;
                worst(&mut m, rel(kappa_factorial(n, k)?, rhs));
            }
        }
        Ok(m)
    });
    rec.check("Gamma recursion gamma_kappa(x+2) = x(x+1)/(1 - kappa^2 (x-1)^2) gamma_kappa(x)", 1e-10, || {
        let mut m = 0.0;
        for _ in 0..40 {
            let kv = rng.gen_range(0.01..0.3);
            let x = rng.gen_range(0.3..2.5);
            let k = kp(kv);
            let rhs = x * (x + 1.0) / (1.0 - kv * kv * (x - 1.0) * (x - 1.0)) * gamma_kappa(x, k)?;
            worst(&mut m, rel(gamma_kappa(x + 2.0, k)?, rhs));
        }
        Ok(m)
    });
    rec.check("gamma_kappa: Gamma-ratio, Mellin-integral and ln_kappa-integral forms agree", 1e-7, || {
        let mut m = 0.0;
        for kv in [0.1, 0.2] {
            let k = kp(kv);
            for x in [1.5, 2.0, 2.5, 3.0] {
                let a = gamma_kappa(x, k)?;
                let b = gamma_kappa_mellin_integral(x, k, &spec)?;
                let c = ln_kappa_gamma_integral(x, k)?;
                worst(&mut m, rel(a, b));
                worst(&mut m, rel(a, c));
                worst(&mut m, rel(b, c));
            }
        }
        Ok(m)
    });
    rec.check("kappa = 1e-10 reproduces exp, ln and Gamma", 1e-7, || {
        let k = kp(1e-10);
        let mut m = 0.0;
        for i in 0..50 {
            let x = -5.0 + 0.2 * i as f64;
            worst(&mut m, rel(exp_kappa(x, k), x.exp()));
            let y = 0.05 + 0.3 * i as f64;
            worst(&mut m, rel_scaled(ln_kappa(y, k)?, y.ln(), 1e-3));
            let g = 0.3 + 0.15 * i as f64;
            worst(&mut m, rel(gamma_kappa(g, k)?, gamma(g)));
        }
        Ok(m)
    });
}

fn calculus_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let kappas: Vec<f64> = (0..10).map(|_| rng.gen_range(0.05..0.9)).collect();
    let grid: Vec<f64> = (0..=40).map(|i| -10.0 + 0.5 * i as f64).collect();

    rec.check("D_kappa exp_kappa = exp_kappa (finite differences)", 1e-6, || {
        let mut m = 0.0;
        for &kv in &kappas {
            let k = kp(kv);
            let f = move |x: f64| exp_kappa(x, k);
            for &x in &grid {
                worst(&mut m, rel(kappa_derivative(&f, x, k, None)?, f(x)));
            }
        }
        Ok(m)
    });
    rec.check("D_kappa exp_kappa = exp_kappa (analytic derivative)", 1e-12, || {
        let mut m = 0.0;
        for &kv in &kappas {
            let k = kp(kv);
            let f = move |x: f64| exp_kappa(x, k);
            let df = move |x: f64| exp_kappa(x, k) / (kv * x).hypot(1.0);
            for &x in &grid {
                worst(&mut m, rel(kappa_derivative(&f, x, k, Some(&df))?, f(x)));
            }
        }
        Ok(m)
    });
    rec.check("Leibniz rule D(fg) = f Dg + g Df", 1e-12, || {
        let mut m = 0.0;
        let (f, df) = (|x: f64| x.sin() + 2.0, |x: f64| x.cos());
        let (g, dg) = (|x: f64| x * x * x, |x: f64| 3.0 * x * x);
        for &kv in &kappas {
            let k = kp(kv);
            let fg = |x: f64| f(x) * g(x);
            let dfg = |x: f64| df(x) * g(x) + f(x) * dg(x);
            for &x in &grid {
                let lhs = kappa_derivative(&fg, x, k, Some(&dfg))?;
                let rhs = f(x) * kappa_derivative(&g, x, k, Some(&dg))? + g(x) * kappa_derivative(&f, x, k, Some(&df))?;
                worst(&mut m, rel_scaled(lhs, rhs, 1.0));
            }
        }
        Ok(m)
    });
    rec.check("Leibniz rule (finite differences)", 1e-6, || {
        let mut m = 0.0;
        let f = |x: f64| x.sin() + 2.0;
        let g = |x: f64| (0.3 * x).exp();
        for &kv in &kappas {
            let k = kp(kv);
            let fg = |x: f64| f(x) * g(x);
            for &x in &grid {
                let lhs = kappa_derivative(&fg, x, k, None)?;
                let rhs = f(x) * kappa_derivative(&g, x, k, None)? + g(x) * kappa_derivative(&f, x, k, None)?;
                worst(&mut m, rel_scaled(lhs, rhs, 1.0));
            }
        }
        Ok(m)
    });
    rec.check("kappa-integral of D_kappa f recovers f(b) - f(a)", 1e-10, || {
        // f(b) - f(a) can be small, so the target needs an absolute floor
        let spec = QuadratureSpec::new(1e-12, 1e-11, 2000)?;
        let mut m = 0.0;
        let f = |x: f64| (0.7 * x).sin() * x + x * x;
        let df = |x: f64| 0.7 * (0.7 * x).cos() * x + (0.7 * x).sin() + 2.0 * x;
        for &kv in &kappas {
            let k = kp(kv);
            let d = move |x: f64| kappa_derivative(&f, x, k, Some(&df)).unwrap_or(f64::NAN);
            let a = rng.gen_range(-5.0..0.0);
            let b = rng.gen_range(0.5..6.0);
            let r = kappa_integral(&d, a, b, k, Measure::Kappa, &spec)?.into_value("kappa integral")?;
            worst(&mut m, rel_scaled(r, f(b) - f(a), 1.0));
        }
        Ok(m)
    });
    rec.check("energy theorem D_kappa W = x (analytic derivative)", 1e-12, || {
        let mut m = 0.0;
        for &kv in &kappas {
            let k = kp(kv);
            let w = move |x: f64| kinetic_energy(x, k);
            let dw = move |x: f64| x / (kv * x).hypot(1.0);
            for &x in &grid {
                worst(&mut m, rel_scaled(kappa_derivative(&w, x, k, Some(&dw))?, x, 1.0));
            }
        }
        Ok(m)
    });
    rec.check("energy theorem D_kappa W = x (finite differences)", 1e-7, || {
        let mut m = 0.0;
        for &kv in &kappas {
            let k = kp(kv);
            let w = move |x: f64| kinetic_energy(x, k);
            for &x in &grid {
                worst(&mut m, rel_scaled(kappa_derivative(&w, x, k, None)?, x, 1.0));
            }
        }
        Ok(m)
    });
}

fn trig_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let tk = |x: f64, k: KappaParam, s: TrigSelector| trig_kappa(x, k, s);
    let samples = 1000;

    rec.check("cosh_kappa^2 - sinh_kappa^2 = 1", 1e-12, || {
        let mut m = 0.0;
        for _ in 0..samples {
            let k = kp(rng.gen_range(0.0..0.95));
            let x = rng.gen_range(-10.0..10.0);
            let (c, s) = (tk(x, k, TrigSelector::COSH)?, tk(x, k, TrigSelector::SINH)?);
            worst(&mut m, ((c - s) * (c + s) - 1.0).abs() / (c * c));
        }
        Ok(m)
    });
    rec.check("cos_kappa^2 + sin_kappa^2 = 1", 1e-12, || {
        let mut m = 0.0;
        for _ in 0..samples {
            let kv = rng.gen_range(0.01..0.95);
            let k = kp(kv);
            let x = rng.gen_range(-1.0..1.0) / kv;
            let (c, s) = (tk(x, k, TrigSelector::COS)?, tk(x, k, TrigSelector::SIN)?);
            worst(&mut m, (c * c + s * s - 1.0).abs());
        }
        Ok(m)
    });
    rec.check("hyperbolic addition formulas with kappa-sums", 1e-11, || {
        let mut m = 0.0;
        for _ in 0..samples {
            let k = kp(rng.gen_range(0.0..0.95));
            let (x, y) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let (xs, xd) = (kappa_sum(x, y, k, HYP)?, kappa_diff(x, y, k, HYP)?);
            let (sx, cx) = (tk(x, k, TrigSelector::SINH)?, tk(x, k, TrigSelector::COSH)?);
            let (sy, cy) = (tk(y, k, TrigSelector::SINH)?, tk(y, k, TrigSelector::COSH)?);
            let (ss, sd) = (tk(xs, k, TrigSelector::SINH)?, tk(xd, k, TrigSelector::SINH)?);
            worst(&mut m, rel_scaled(ss + sd, 2.0 * sx * cy, ss.abs().max(sd.abs())));
            worst(&mut m, rel(tk(xs, k, TrigSelector::COSH)?, cx * cy + sx * sy));
            let (tx, ty) = (tk(x, k, TrigSelector::TANH)?, tk(y, k, TrigSelector::TANH)?);
            worst(&mut m, rel_scaled(tx + ty, ss / (cx * cy), tx.abs().max(ty.abs())));
        }
        Ok(m)
    });
    rec.check("cyclic addition formula with kappa-sums", 1e-11, || {
        let mut m = 0.0;
        for _ in 0..samples {
            let kv = rng.gen_range(0.01..0.95);
            let k = kp(kv);
            // angles within pi/4 of zero keep the sum on the principal branch
            let lim = std::f64::consts::FRAC_PI_4 / kv;
            let x = deform_inv(rng.gen_range(-lim..lim), k, CYC)?;
            let y = deform_inv(rng.gen_range(-lim..lim), k, CYC)?;
            let xs = kappa_sum(x, y, k, CYC)?;
            let (sx, cx) = (tk(x, k, TrigSelector::SIN)?, tk(x, k, TrigSelector::COS)?);
            let (sy, cy) = (tk(y, k, TrigSelector::SIN)?, tk(y, k, TrigSelector::COS)?);
            worst(&mut m, rel_scaled(tk(xs, k, TrigSelector::SIN)?, sx * cy + cx * sy, 1.0));
            worst(&mut m, rel_scaled(tk(xs, k, TrigSelector::COS)?, cx * cy - sx * sy, 1.0));
        }
        Ok(m)
    });
    rec.check("sinh_kappa^4 and cos_kappa^5 multiple-angle identities", 1e-10, || {
        let mut m = 0.0;
        for _ in 0..200 {
            let kv = rng.gen_range(0.01..0.9);
            let k = kp(kv);
            let x = rng.gen_range(-2.0..2.0);
            let s4 = tk(x, k, TrigSelector::SINH)?.powi(4);
            let c4 = tk(kappa_nfold_sum(4, x, k, HYP)?, k, TrigSelector::COSH)?;
            let c2 = tk(kappa_nfold_sum(2, x, k, HYP)?, k, TrigSelector::COSH)?;
            worst(&mut m, rel_scaled(s4, (c4 - 4.0 * c2 + 3.0) / 8.0, c4 / 8.0));
            let lim = 0.99 * std::f64::consts::FRAC_PI_2 / (5.0 * kv);
            let y = deform_inv(rng.gen_range(-lim..lim), k, CYC)?;
            let c5 = tk(kappa_nfold_sum(5, y, k, CYC)?, k, TrigSelector::COS)?;
            let c3 = tk(kappa_nfold_sum(3, y, k, CYC)?, k, TrigSelector::COS)?;
            let c1 = tk(y, k, TrigSelector::COS)?;
            worst(&mut m, rel_scaled(c1.powi(5), (c5 + 5.0 * c3 + 10.0 * c1) / 16.0, 1.0));
        }
        Ok(m)
    });
    rec.check("De Moivre (cosh_kappa x +- sinh_kappa x)^r", 1e-11, || {
        let mut m = 0.0;
        for _ in 0..200 {
            let k = kp(rng.gen_range(0.01..0.9));
            let (x, r) = (rng.gen_range(-3.0..3.0), rng.gen_range(0.5..3.0));
            let ks = k.scaled(r)?;
            for sg in [1.0, -1.0] {
                let lhs = (tk(x, k, TrigSelector::COSH)? + sg * tk(x, k, TrigSelector::SINH)?).powf(r);
                let c = tk(r * x, ks, TrigSelector::COSH)?;
                let rhs = c + sg * tk(r * x, ks, TrigSelector::SINH)?;
                worst(&mut m, rel_scaled(lhs, rhs, c));
            }
        }
        Ok(m)
    });
    rec.check("D_kappa sinh_kappa = cosh_kappa, D_kappa tanh_kappa = cosh_kappa^-2, D_kappa cos_kappa = -sin_kappa", 1e-6, || {
        let mut m = 0.0;
        for _ in 0..100 {
            let kv = rng.gen_range(0.05..0.9);
            let k = kp(kv);
            let x = rng.gen_range(-3.0..3.0);
            let sh = move |z: f64| trig_kappa(z, k, TrigSelector::SINH).unwrap_or(f64::NAN);
            let th = move |z: f64| trig_kappa(z, k, TrigSelector::TANH).unwrap_or(f64::NAN);
            let c = tk(x, k, TrigSelector::COSH)?;
            worst(&mut m, rel(kappa_derivative(&sh, x, k, None)?, c));
            worst(&mut m, rel(kappa_derivative(&th, x, k, None)?, 1.0 / (c * c)));
            let y = rng.gen_range(-0.9..0.9) / kv;
            let co = move |z: f64| trig_kappa(z, k, TrigSelector::COS).unwrap_or(f64::NAN);
            let d = kappa_derivative_with(&co, y, k, CYC, None)?;
            worst(&mut m, rel_scaled(d, -tk(y, k, TrigSelector::SIN)?, 1.0));
        }
        Ok(m)
    });
    rec.check("exp_kappa(arcsinh_kappa x) = exp(arcsinh x)", 1e-12, || {
        let mut m = 0.0;
        for _ in 0..samples {
            let k = kp(rng.gen_range(0.0..0.95));
            let x = rng.gen_range(-30.0..30.0);
            worst(&mut m, rel(exp_kappa(inverse_trig_kappa(x, k, TrigSelector::SINH)?, k), x.asinh().exp()));
        }
        Ok(m)
    });
    rec.check("inverse functions round-trip", 1e-11, || {
        let mut m = 0.0;
        for _ in 0..samples {
            let kv = rng.gen_range(0.01..0.9);
            let k = kp(kv);
            let x = rng.gen_range(-5.0..5.0);
            for sel in [TrigSelector::SINH, TrigSelector::TANH] {
                let back = inverse_trig_kappa(tk(x, k, sel)?, k, sel)?;
                worst(&mut m, rel_scaled(back, x, 1e-2));
            }
            let c = tk(x.abs() + 0.1, k, TrigSelector::COSH)?;
            worst(&mut m, rel(inverse_trig_kappa(c, k, TrigSelector::COSH)?, x.abs() + 0.1));
            let lim = 0.99 * std::f64::consts::FRAC_PI_2.min(std::f64::consts::FRAC_PI_2 / kv);
            let y = deform_inv(rng.gen_range(-lim..lim), k, CYC)?;
            let s = tk(y, k, TrigSelector::SIN)?;
            worst(&mut m, rel_scaled(inverse_trig_kappa(s, k, TrigSelector::SIN)?, y, 1e-2));
        }
        Ok(m)
    });
    rec.check("sin_kappa(x) = -i sinh_kappa(ix), cos_kappa(x) = cosh_kappa(ix)", 1e-12, || {
        let mut m = 0.0;
        let i = Complex64::new(0.0, 1.0);
        for _ in 0..samples {
            let kv = rng.gen_range(0.01..0.95);
            let k = kp(kv);
            let x = rng.gen_range(-1.0..1.0) / kv;
            let th = (i * x * kv).asinh() / kv;
            worst(&mut m, (tk(x, k, TrigSelector::SIN)? - (-i * th.sinh()).re).abs());
            worst(&mut m, (tk(x, k, TrigSelector::COS)? - th.cosh().re).abs());
        }
        Ok(m)
    });
    rec.check("arcsinh_kappa(x) = (1/kappa) sinh_(1/kappa)(kappa x)", 1e-12, || {
        let mut m = 0.0;
        for _ in 0..200 {
            let kv = rng.gen_range(0.05..0.95);
            let x = rng.gen_range(-5.0..5.0);
            let lhs = inverse_trig_kappa(x, kp(kv), TrigSelector::SINH)?;
            let rhs = trig_kappa(kv * x, kp(1.0 / kv), TrigSelector::SINH)? / kv;
            worst(&mut m, rel_scaled(lhs, rhs, 1e-2));
        }
        Ok(m)
    });
    rec.check_fails("arccosh analogue of the scaled identity does not hold", 1e-3, || {
        let (kv, x) = (0.4, 2.0);
        let lhs = inverse_trig_kappa(x, kp(kv), TrigSelector::COSH)?;
        let rhs = trig_kappa(kv * x, kp(1.0 / kv), TrigSelector::COSH)? / kv;
        Ok(rel(lhs, rhs))
    });
    rec.check("kappa = 1e-10 reproduces sinh and cosh", 1e-7, || {
        let k = kp(1e-10);
        let mut m = 0.0;
        for i in 0..=60 {
            let x = -6.0 + 0.2 * i as f64;
            worst(&mut m, rel_scaled(tk(x, k, TrigSelector::SINH)?, x.sinh(), 1e-3));
            worst(&mut m, rel(tk(x, k, TrigSelector::COSH)?, x.cosh()));
        }
        Ok(m)
    });
}

fn table_rows() -> [TableEntry; 8] {
    [
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

fn laplace_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let spec = QuadratureSpec::default();
    let one = |_: f64| 1.0;
    let id = |t: f64| t;

    rec.check("transform table rows vs quadrature on an (s, kappa) grid", 1e-6, || {
        let mut m = 0.0;
        for kv in [0.1, 0.3, 0.5] {
            let k = kp(kv);
            for e in table_rows() {
                for _ in 0..3 {
                    let s = e.growth().abscissa(k) + rng.gen_range(0.5..3.0);
                    let want = laplace_table(e, s, k)?;
                    let f = |t: f64| e.original(t).unwrap_or(f64::NAN);
                    let got = laplace_kappa_from(&f, e.support_start(), s, k, e.growth(), &spec)?
                        .into_value("laplace_kappa")?;
                    worst(&mut m, (got - want).abs() / (1e-2f64).max(want.abs()));
                }
            }
        }
        Ok(m)
    });
    rec.check("Dirac row vs -d/dtau of Heaviside quadrature", 1e-6, || {
        let mut m = 0.0;
        for kv in [0.1, 0.3, 0.5] {
            let k = kp(kv);
            let s = rng.gen_range(1.0..4.0);
            let tau = rng.gen_range(0.1..2.0);
            let h_of = |t0: f64| -> Result<f64> {
                laplace_kappa_from(&one, t0, s, k, GrowthBound::new(1.0), &spec)?.into_value("heaviside")
            };
            let d = |h: f64| -> Result<f64> { Ok(-(h_of(tau + h)? - h_of(tau - h)?) / (2.0 * h)) };
            let est = (4.0 * d(0.01)? - d(0.02)?) / 3.0;
            worst(&mut m, rel(est, laplace_table(TableEntry::Dirac { tau }, s, k)?));
        }
        Ok(m)
    });
    rec.check("convolution theorem for (1,1), (1,t), (t,t)", 1e-6, || {
        let mut m = 0.0;
        let pairs: [(&dyn Fn(f64) -> f64, f64, &dyn Fn(f64) -> f64, f64); 3] =
            [(&one, 1.0, &one, 1.0), (&one, 1.0, &id, 2.0), (&id, 2.0, &id, 2.0)];
        for kv in [0.2, 0.5] {
            let k = kp(kv);
            let s = 2.0 * (1.0 + kv * 2.0);
            for (f, nf, g, ng) in pairs {
                let conv = |t: f64| kappa_convolution(f, g, t, k, &spec).map(|r| r.value).unwrap_or(f64::NAN);
                let lhs = laplace_kappa(&conv, s, k, GrowthBound::new(nf + ng), &spec)?.into_value("convolution")?;
                let ff = laplace_kappa(f, s, k, GrowthBound::new(nf), &spec)?.into_value("f")?;
                let gg = laplace_kappa(g, s, k, GrowthBound::new(ng), &spec)?.into_value("g")?;
                worst(&mut m, rel(lhs, ff * gg));
            }
        }
        Ok(m)
    });
    rec.check("convolution commutativity and bilinearity", 1e-8, || {
        let mut m = 0.0;
        let k = kp(rng.gen_range(0.1..0.6));
        let f = |t: f64| (0.5 * t).sin() + 1.0;
        let g = |t: f64| t * t;
        let h = |t: f64| (-t).exp();
        for _ in 0..4 {
            let t = rng.gen_range(0.1..6.0);
            let c = |a: &dyn Fn(f64) -> f64, b: &dyn Fn(f64) -> f64| -> Result<f64> {
                Ok(kappa_convolution(a, b, t, k, &spec)?.value)
            };
            let (fg, gf, fh) = (c(&f, &g)?, c(&g, &f)?, c(&f, &h)?);
            worst(&mut m, rel_scaled(fg, gf, 1.0));
            let sum = |x: f64| 2.0 * g(x) - 3.0 * h(x);
            worst(&mut m, rel_scaled(c(&f, &sum)?, 2.0 * fg - 3.0 * fh, 1.0));
        }
        Ok(m)
    });
    rec.check("transform property table rows", 1e-6, || {
        let mut m = 0.0;
        let k = kp(0.3);
        let d_id = |_: f64| 1.0;
        let lin = PropertyInput::new(&one, GrowthBound::new(2.0)).with_g(&id);
        let base = PropertyInput::new(&one, GrowthBound::new(1.0));
        let deriv = PropertyInput::new(&id, GrowthBound::new(2.0)).with_derivative(&d_id);
        let rows: [(LaplaceProperty, &PropertyInput, f64); 9] = [
            (LaplaceProperty::Linearity { a: 2.0, b: 3.0 }, &lin, 2.0),
            (LaplaceProperty::Scaling { a: 2.0 }, &base, 3.0),
            (LaplaceProperty::Modulation { a: 1.0 }, &base, 2.0),
            (LaplaceProperty::Derivative, &deriv, 2.0),
            (LaplaceProperty::WeightedDerivative, &deriv, 2.0),
            (LaplaceProperty::WeightedIntegral, &deriv, 2.0),
            (LaplaceProperty::LogMultiplication { n: 1 }, &deriv, 2.0),
            (LaplaceProperty::LogMultiplication { n: 2 }, &deriv, 2.0),
            (LaplaceProperty::LogDivision, &deriv, 2.0),
        ];
        for (p, input, s) in rows {
            worst(&mut m, laplace_property_check(p, input, s, k, &spec)?.residual);
        }
        Ok(m)
    });
    rec.check("final value of [exp_kappa(-t)]^kappa is 1/2", 1e-4, || {
        let k = kp(0.4);
        let f = |t: f64| exp_kappa(-0.4 * t, kp(1.0));
        Ok((final_value(&f, k, GrowthBound::new(0.0), &spec)? - 0.5).abs())
    });
    rec.check("Bessel-kernel representation of exp_kappa(-s)", 1e-8, || {
        let mut m = 0.0;
        for (s, n) in [(0.0, 2), (1.0, 2), (2.0, 3)] {
            worst(&mut m, bessel_kernel_check(s, n, &spec)?.residual);
        }
        Ok(m)
    });
    rec.check("inverse transform round trips", 1e-6, || {
        let mut m = 0.0;
        let k = kp(0.3);
        for (e, t, c) in [
            (TableEntry::OddMonomial { m: 1 }, 1.0, 1.5),
            (TableEntry::Heaviside { tau: 0.0 }, 2.0, 1.0),
        ] {
            let f = |s: Complex64| laplace_table_complex(e, s, k).unwrap_or(Complex64::new(f64::NAN, 0.0));
            let got = inverse_laplace_kappa(&f, t, k, c, &spec)?.value;
            worst(&mut m, (got - e.original(t).unwrap_or(f64::NAN)).abs());
        }
        let f = |s: Complex64| 1.0 / (s * s);
        worst(&mut m, (inverse_laplace_kappa(&f, 3.0, KappaParam::ZERO, 0.5, &spec)?.value - 3.0).abs());
        Ok(m)
    });
    rec.check("kappa = 1e-10 reproduces the classical transform table", 1e-7, || {
        let k = kp(1e-10);
        let mut m = 0.0;
        let s = rng.gen_range(0.5f64..3.0);
        let classical = [
            (TableEntry::Heaviside { tau: 0.6 }, (-s * 0.6).exp() / s),
            (TableEntry::Power { nu: 2.5 }, gamma(2.5) / s.powf(2.5)),
            (TableEntry::OddMonomial { m: 2 }, 6.0 / s.powi(4)),
            (TableEntry::EvenMonomial { m: 1 }, 2.0 / s.powi(3)),
            (TableEntry::Dirac { tau: 0.6 }, (-s * 0.6).exp()),
        ];
        for (e, want) in classical {
            worst(&mut m, rel(laplace_table(e, s, k)?, want));
        }
        let q = laplace_kappa(&one, s, k, GrowthBound::new(1.0), &spec)?.into_value("laplace")?;
        worst(&mut m, rel(q, 1.0 / s));
        Ok(m)
    });
}

fn stat_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let spec = QuadratureSpec::default();

    rec.check("uniform entropy on 4 states: ln 4 at kappa = 0, 1.5 at kappa = 0.5", 1e-14, || {
        let u = DiscreteDistribution::uniform(4)?;
        let a = (kappa_entropy_discrete(&u, KappaParam::ZERO)? - 4f64.ln()).abs();
        let b = (kappa_entropy_discrete(&u, kp(0.5))? - 1.5).abs();
        Ok(a.max(b))
    });
    rec.check("maxent stationarity d/dy[y ln_kappa y] = g", 1e-6, || {
        let mut m = 0.0;
        let g = |x: f64| 2.0 * x.sin() - 0.5 * x;
        for i in 1..=9 {
            let k = kp(i as f64 / 10.0);
            for _ in 0..20 {
                worst(&mut m, stationarity_residual(&g, rng.gen_range(-4.0..4.0), k)?);
            }
        }
        Ok(m)
    });
    rec.check("uniform distribution maximizes S_kappa (violations)", 0.0, || {
        let mut bad = 0usize;
        for kv in [0.0, 0.3, 0.7] {
            let k = kp(kv);
            let top = kappa_entropy_discrete(&DiscreteDistribution::uniform(8)?, k)?;
            for _ in 0..1000 {
                let d = DiscreteDistribution::normalized((0..8).map(|_| rng.gen::<f64>()).collect())?;
                if kappa_entropy_discrete(&d, k)? > top {
                    bad += 1;
                }
            }
        }
        Ok(bad as f64)
    });
    rec.check("appending a zero-weight state leaves S_kappa unchanged", 0.0, || {
        let mut m = 0.0;
        for _ in 0..100 {
            let k = kp(rng.gen_range(0.0..0.95));
            let w: Vec<f64> = (0..6).map(|_| rng.gen::<f64>()).collect();
            let d = DiscreteDistribution::normalized(w)?;
            let mut ext = d.weights().to_vec();
            ext.push(0.0);
            let e = DiscreteDistribution::new(ext)?;
            worst(&mut m, (kappa_entropy_discrete(&d, k)? - kappa_entropy_discrete(&e, k)?).abs());
        }
        Ok(m)
    });
    rec.check("tail exponent of exp_kappa(-E) is -1/kappa", 0.02, || {
        let mut m = 0.0;
        let e: Vec<f64> = (0..41).map(|i| 1e2 * 100f64.powf(i as f64 / 40.0)).collect();
        for kv in [0.25, 0.5] {
            let p = StatParams::new(1.0, 0.0, kp(kv))?;
            let f: Vec<f64> = e.iter().map(|&x| kappa_statistical_weight(x, &p)).collect();
            worst(&mut m, (tail_exponent_fit(&e, &f)? * kv + 1.0).abs());
        }
        Ok(m)
    });
    rec.check("continuous S_kappa -> Shannon entropy, gap ~ kappa^2", 1e-3, || {
        let gauss = |x: f64| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let inf = f64::INFINITY;
        let s = |kv: f64| -> Result<f64> {
            kappa_entropy(&gauss, -inf, inf, kp(kv), &spec)?.into_value("entropy")
        };
        let s0 = s(0.0)?;
        let ratio = (s(1e-2)? - s0) / (s(1e-4)? - s0);
        Ok((ratio / 1e4 - 1.0).abs().max((s0 - 0.5 * (2.0 * std::f64::consts::PI).ln() - 0.5).abs()))
    });
    rec.check("kappa = 1e-10 reproduces Shannon entropy and the Boltzmann weight", 1e-7, || {
        let k = kp(1e-10);
        let mut m = 0.0;
        for _ in 0..20 {
            let d = DiscreteDistribution::normalized((0..6).map(|_| rng.gen::<f64>()).collect())?;
            let shannon: f64 = d.weights().iter().map(|p| -p * p.ln()).sum();
            worst(&mut m, rel(kappa_entropy_discrete(&d, k)?, shannon));
            let p = StatParams::new(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0), k)?;
            let e = rng.gen_range(-3.0..3.0);
            worst(&mut m, rel(kappa_statistical_weight(e, &p), (-p.beta * (e - p.mu)).exp()));
        }
        Ok(m)
    });
}
