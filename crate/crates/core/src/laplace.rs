//! The κ-Laplace transform F(s) = ∫_0^∞ f(t) [exp_κ(−t)]^s dt, its closed-form
//! table, the κ-convolution, the property table, the limit-value theorems,
//! the Bessel-kernel form of exp_κ and a numerical inverse.
//!
//! The kernel is always exp(−s{t}). In u = {t} the transform is an ordinary
//! Laplace transform, F(s) = ∫_0^∞ f([u]) cosh(κu) e^{−su} du, which is how
//! the forward quadrature, the convolution and the inverse are evaluated.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::{deform_inv, deform_map};
use crate::error::{check_finite, KappaError, Result};
use crate::functions::exp_kappa;
use crate::gamma::gamma_kappa;
use crate::param::{DeformKind, KappaParam};
use crate::quadrature::{
    accelerated_panel_sum, integrate, integrate_doubling, integrate_to_infinity, QuadratureResult, QuadratureSpec,
    TailStrategy,
};
use crate::special::{bessel_j, gamma, ln_cosh, ln_gamma_ratio_scaled, ln_gamma_ratio_scaled_complex};

const HYP: DeformKind = DeformKind::Hyperbolic;

fn brace(t: f64, k: KappaParam) -> f64 {
    deform_map(t, k, HYP).unwrap_or(f64::NAN)
}

fn bracket(u: f64, k: KappaParam) -> f64 {
    deform_inv(u, k, HYP).unwrap_or(f64::INFINITY)
}

/// Growth contract for a transformed function: f(t) = O(t^{ν−1}) as t → ∞,
/// so the integrand decays like t^{ν−1−s/|κ|} and the transform exists for
/// s > |κ|ν. f = 1 has ν = 1, f = t has ν = 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthBound {
    pub nu: f64,
}

impl GrowthBound {
    pub const fn new(nu: f64) -> Self {
        GrowthBound { nu }
    }

    /// Any s converges (compactly supported or decaying faster than every power).
    pub const UNBOUNDED: GrowthBound = GrowthBound { nu: f64::NEG_INFINITY };

    /// The convergence abscissa |κ|ν (0 for the ordinary transform).
    pub fn abscissa(self, k: KappaParam) -> f64 {
        if self.nu == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else if k.is_zero() {
            0.0
        } else {
            k.value() * self.nu
        }
    }

    /// Fails with [`KappaError::Guard`] unless s > |κ|ν.
    pub fn check(self, s: f64, k: KappaParam) -> Result<()> {
        check_finite("s", s)?;
        let bound = self.abscissa(k);
        if s > bound {
            Ok(())
        } else {
            Err(KappaError::Guard { s, bound })
        }
    }
}

/// F(s) = ∫_0^∞ f(t) exp(−s{t}) dt.
pub fn laplace_kappa(
    f: &dyn Fn(f64) -> f64,
    s: f64,
    k: KappaParam,
    bound: GrowthBound,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    laplace_kappa_from(f, 0.0, s, k, bound, spec)
}

/// ∫_{t0}^∞ f(t) exp(−s{t}) dt, the transform of f(t)·u(t − t0).
pub fn laplace_kappa_from(
    f: &dyn Fn(f64) -> f64,
    t0: f64,
    s: f64,
    k: KappaParam,
    bound: GrowthBound,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    check_finite("t0", t0)?;
    if t0 < 0.0 {
        return Err(KappaError::Input(format!("lower limit must be >= 0, got {t0}")));
    }
    bound.check(s, k)?;
    let kv = k.value();
    let width = 1.0 / s.max(1.0);
    let r = match spec.tail {
        TailStrategy::BraceSubstitution => {
            let integrand = |u: f64| {
                let w = (ln_cosh(kv * u) - s * u).exp();
                let t = bracket(u, k);
                if w == 0.0 || !t.is_finite() {
                    0.0
                } else {
                    f(t) * w
                }
            };
            // [u] leaves the f64 range at u = {f64::MAX}; what is cut off
            // there is below e^{−709(s−|κ|ν)/|κ|}
            let end = if k.is_zero() { f64::INFINITY } else { brace(f64::MAX, k) };
            integrate_doubling(integrand, brace(t0, k), width, end, spec)
        }
        TailStrategy::ExponentialMap => {
            let integrand = |t: f64| {
                let w = (-s * brace(t, k)).exp();
                if w == 0.0 {
                    0.0
                } else {
                    f(t) * w
                }
            };
            integrate_to_infinity(integrand, t0, width, spec)
        }
    };
    Ok(r)
}

/// A row of the closed-form transform table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TableEntry {
    /// δ(t − τ)
    Dirac { tau: f64 },
    /// u(t − τ)
    Heaviside { tau: f64 },
    /// t^{ν−1}, ν > 0
    Power { nu: f64 },
    /// t^{2m−1}, m ≥ 1
    OddMonomial { m: u32 },
    /// t^{2m}, m ≥ 0
    EvenMonomial { m: u32 },
}

impl TableEntry {
    fn validate(&self) -> Result<()> {
        match *self {
            TableEntry::Dirac { tau } | TableEntry::Heaviside { tau } => {
                check_finite("tau", tau)?;
                if tau < 0.0 {
                    return Err(KappaError::Domain {
                        what: "table entry",
                        value: tau,
                        domain: "tau >= 0".into(),
                    });
                }
            }
            TableEntry::Power { nu } => {
                check_finite("nu", nu)?;
                if nu <= 0.0 {
                    return Err(KappaError::Domain {
                        what: "power table entry",
                        value: nu,
                        domain: "nu > 0".into(),
                    });
                }
            }
            TableEntry::OddMonomial { m } => {
                if m == 0 {
                    return Err(KappaError::Domain {
                        what: "odd monomial table entry",
                        value: 0.0,
                        domain: "m >= 1".into(),
                    });
                }
            }
            TableEntry::EvenMonomial { .. } => {}
        }
        Ok(())
    }

    /// f(t), or `None` for the Dirac row, which has no pointwise values.
    pub fn original(&self, t: f64) -> Option<f64> {
        match *self {
            TableEntry::Dirac { .. } => None,
            TableEntry::Heaviside { tau } => Some(if t >= tau { 1.0 } else { 0.0 }),
            TableEntry::Power { nu } => Some(t.powf(nu - 1.0)),
            TableEntry::OddMonomial { m } => Some(t.powi(2 * m as i32 - 1)),
            TableEntry::EvenMonomial { m } => Some(t.powi(2 * m as i32)),
        }
    }

    /// Where the original starts being nonzero.
    pub fn support_start(&self) -> f64 {
        match *self {
            TableEntry::Dirac { tau } | TableEntry::Heaviside { tau } => tau,
            _ => 0.0,
        }
    }

    pub fn growth(&self) -> GrowthBound {
        match *self {
            TableEntry::Dirac { .. } => GrowthBound::UNBOUNDED,
            TableEntry::Heaviside { .. } => GrowthBound::new(1.0),
            TableEntry::Power { nu } => GrowthBound::new(nu),
            TableEntry::OddMonomial { m } => GrowthBound::new(2.0 * m as f64),
            TableEntry::EvenMonomial { m } => GrowthBound::new(2.0 * m as f64 + 1.0),
        }
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Closed-form transform of a table row.
pub fn laplace_table(entry: TableEntry, s: f64, k: KappaParam) -> Result<f64> {
    entry.validate()?;
    entry.growth().check(s, k)?;
    let kv = k.value();
    let k2 = kv * kv;
    let v = match entry {
        TableEntry::Dirac { tau } => (-s * brace(tau, k)).exp(),
        TableEntry::Heaviside { tau } => {
            (s * (kv * tau).hypot(1.0) + k2 * tau) / ((s - kv) * (s + kv)) * (-s * brace(tau, k)).exp()
        }
        TableEntry::Power { nu } => power_row_ratio(nu, s, k),
        TableEntry::OddMonomial { m } => {
            let mut d = 1.0;
            for j in 1..=m {
                let c = 2.0 * j as f64 * kv;
                d *= (s - c) * (s + c);
            }
            factorial(2 * m - 1) / d
        }
        TableEntry::EvenMonomial { m } => {
            let mut d = 1.0;
            for j in 1..=m + 1 {
                let c = (2.0 * j as f64 - 1.0) * kv;
                d *= (s - c) * (s + c);
            }
            factorial(2 * m) * s / d
        }
    };
    if !v.is_finite() {
        return Err(KappaError::Overflow {
            what: "laplace_table",
            argument: s,
        });
    }
    Ok(v)
}

/// s/(s+κν) Γ(ν)/(2κ)^ν Γ(s/2κ − ν/2)/Γ(s/2κ + ν/2), written with the scaled
/// Γ ratio so that it tends to Γ(ν)/s^ν as κ → 0.
fn power_row_ratio(nu: f64, s: f64, k: KappaParam) -> f64 {
    let base = (gamma(nu).ln() - nu * s.ln()).exp();
    if k.is_zero() {
        return base;
    }
    let kv = k.value();
    s / (s + kv * nu) * base * ln_gamma_ratio_scaled(0.5 * s / kv, 0.5 * nu).exp()
}

/// Both printed forms of the power row: the Γ-ratio form and
/// s²/(s² − κ²ν²) Γ_{κ/s}(ν+1)/(ν s^ν).
pub fn power_row_forms(nu: f64, s: f64, k: KappaParam) -> Result<(f64, f64)> {
    let entry = TableEntry::Power { nu };
    entry.validate()?;
    entry.growth().check(s, k)?;
    let ratio = power_row_ratio(nu, s, k);
    let kv = k.value();
    let gk = gamma_kappa(nu + 1.0, k.scaled(s)?)?;
    let alt = s * s / ((s - kv * nu) * (s + kv * nu)) * gk / (nu * s.powf(nu));
    Ok((ratio, alt))
}

/// Closed-form transform of a table row at complex s (Re s above the abscissa),
/// the form needed by the inverse transform.
pub fn laplace_table_complex(entry: TableEntry, s: Complex64, k: KappaParam) -> Result<Complex64> {
    entry.validate()?;
    entry.growth().check(s.re, k)?;
    let kv = k.value();
    let k2 = kv * kv;
    let v = match entry {
        TableEntry::Dirac { tau } => (-s * brace(tau, k)).exp(),
        TableEntry::Heaviside { tau } => {
            (s * (kv * tau).hypot(1.0) + k2 * tau) / ((s - kv) * (s + kv)) * (-s * brace(tau, k)).exp()
        }
        TableEntry::Power { nu } => {
            let base = (gamma(nu).ln() - nu * s.ln()).exp();
            if k.is_zero() {
                base
            } else {
                s / (s + kv * nu) * base * ln_gamma_ratio_scaled_complex(s / (2.0 * kv), 0.5 * nu).exp()
            }
        }
        TableEntry::OddMonomial { m } => {
            let mut d = Complex64::new(1.0, 0.0);
            for j in 1..=m {
                let c = 2.0 * j as f64 * kv;
                d *= (s - c) * (s + c);
            }
            factorial(2 * m - 1) / d
        }
        TableEntry::EvenMonomial { m } => {
            let mut d = Complex64::new(1.0, 0.0);
            for j in 1..=m + 1 {
                let c = (2.0 * j as f64 - 1.0) * kv;
                d *= (s - c) * (s + c);
            }
            factorial(2 * m) * s / d
        }
    };
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(KappaError::Overflow {
            what: "laplace_table_complex",
            argument: s.norm(),
        });
    }
    Ok(v)
}

/// (f ⋆ g)(t) = ∫_0^t f(t ⊖ τ) g(τ) √(1+κ²(t⊖τ)²)/√(1+κ²t²) dτ.
///
/// This weight makes L_κ{f ⋆ g} = L_κ{f}·L_κ{g}: with u = {t} and w = {τ} the
/// integral is the ordinary convolution of f([u])cosh(κu) with g([u])cosh(κu).
pub fn kappa_convolution(
    f: &dyn Fn(f64) -> f64,
    g: &dyn Fn(f64) -> f64,
    t: f64,
    k: KappaParam,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    check_finite("t", t)?;
    if t < 0.0 {
        return Err(KappaError::Input(format!("convolution needs t >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(QuadratureResult::zero());
    }
    let kv = k.value();
    let big_u = brace(t, k);
    let r = integrate(
        |w: f64| {
            let d = big_u - w;
            f(bracket(d, k)) * g(bracket(w, k)) * (kv * d).cosh() * (kv * w).cosh()
        },
        0.0,
        big_u,
        spec,
    );
    Ok(r.scale(1.0 / (kv * big_u).cosh()))
}

/// Rows of the transform property table. F is the transform of f.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LaplaceProperty {
    /// a f + b g ↔ a F + b G
    Linearity { a: f64, b: f64 },
    /// f(a t) ↔ (1/a) F_{κ/a}(s/a)
    Scaling { a: f64 },
    /// [exp_κ(t)]^a f(t) ↔ F(s − a)
    Modulation { a: f64 },
    /// f′ ↔ s L{f/√(1+κ²t²)} − f(0)
    Derivative,
    /// d/dt[√(1+κ²t²) f] ↔ s F − f(0)
    WeightedDerivative,
    /// (1/√(1+κ²t²)) ∫_0^t f ↔ F/s
    WeightedIntegral,
    /// {t}^n f ↔ (−1)^n F^{(n)}(s), n ∈ {1, 2}
    LogMultiplication { n: u32 },
    /// f/{t} ↔ ∫_s^∞ F, needs f(0) = 0
    LogDivision,
}

/// The function(s) a property row is checked on.
#[derive(Clone, Copy)]
pub struct PropertyInput<'a> {
    pub f: &'a dyn Fn(f64) -> f64,
    /// Second function, for linearity.
    pub g: Option<&'a dyn Fn(f64) -> f64>,
    /// f′, for the derivative rows.
    pub df: Option<&'a dyn Fn(f64) -> f64>,
    /// Growth of f (and g).
    pub bound: GrowthBound,
}

impl<'a> PropertyInput<'a> {
    pub fn new(f: &'a dyn Fn(f64) -> f64, bound: GrowthBound) -> Self {
        PropertyInput {
            f,
            g: None,
            df: None,
            bound,
        }
    }

    pub fn with_g(mut self, g: &'a dyn Fn(f64) -> f64) -> Self {
        self.g = Some(g);
        self
    }

    pub fn with_derivative(mut self, df: &'a dyn Fn(f64) -> f64) -> Self {
        self.df = Some(df);
        self
    }
}

/// Both sides of a property row and their relative residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropertyCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

impl PropertyCheck {
    fn new(lhs: f64, rhs: f64) -> Self {
        let scale = lhs.abs().max(rhs.abs());
        let residual = if scale == 0.0 { 0.0 } else { (lhs - rhs).abs() / scale };
        PropertyCheck { lhs, rhs, residual }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.residual <= tol
    }
}

fn transform(
    f: &dyn Fn(f64) -> f64,
    s: f64,
    k: KappaParam,
    bound: GrowthBound,
    spec: &QuadratureSpec,
) -> Result<f64> {
    laplace_kappa(f, s, k, bound, spec)?.into_value("laplace_kappa")
}

fn require<'a>(
    x: Option<&'a dyn Fn(f64) -> f64>,
    what: &str,
) -> Result<&'a dyn Fn(f64) -> f64> {
    x.ok_or_else(|| KappaError::Precondition(format!("this property needs {what}")))
}

/// Evaluates both sides of a property row at s.
pub fn laplace_property_check(
    property: LaplaceProperty,
    input: &PropertyInput,
    s: f64,
    k: KappaParam,
    spec: &QuadratureSpec,
) -> Result<PropertyCheck> {
    let f = input.f;
    let bound = input.bound;
    let kv = k.value();
    let lorentz = move |t: f64| (kv * t).hypot(1.0);
    bound.check(s, k)?;
    let check = match property {
        LaplaceProperty::Linearity { a, b } => {
            let g = require(input.g, "a second function g")?;
            let h = |t: f64| a * f(t) + b * g(t);
            let lhs = transform(&h, s, k, bound, spec)?;
            let rhs = a * transform(f, s, k, bound, spec)? + b * transform(g, s, k, bound, spec)?;
            PropertyCheck::new(lhs, rhs)
        }
        LaplaceProperty::Scaling { a } => {
            if !(a > 0.0 && a.is_finite()) {
                return Err(KappaError::Precondition(format!("scaling needs a > 0, got {a}")));
            }
            let h = |t: f64| f(a * t);
            let lhs = transform(&h, s, k, bound, spec)?;
            let rhs = transform(f, s / a, k.scaled(a)?, bound, spec)? / a;
            PropertyCheck::new(lhs, rhs)
        }
        LaplaceProperty::Modulation { a } => {
            check_finite("a", a)?;
            bound.check(s - a, k)?;
            let h = |t: f64| exp_kappa(t, k).powf(a) * f(t);
            // the modulated function grows a/|κ| orders faster
            let grown = if k.is_zero() { bound } else { GrowthBound::new(bound.nu + a / kv) };
            let lhs = transform(&h, s, k, grown, spec)?;
            let rhs = transform(f, s - a, k, bound, spec)?;
            PropertyCheck::new(lhs, rhs)
        }
        LaplaceProperty::Derivative => {
            let df = require(input.df, "the derivative f'")?;
            let lhs = transform(df, s, k, bound, spec)?;
            let h = |t: f64| f(t) / lorentz(t);
            let rhs = s * transform(&h, s, k, bound, spec)? - f(0.0);
            PropertyCheck::new(lhs, rhs)
        }
        LaplaceProperty::WeightedDerivative => {
            let df = require(input.df, "the derivative f'")?;
            let h = |t: f64| kv * kv * t * f(t) / lorentz(t) + lorentz(t) * df(t);
            let lhs = transform(&h, s, k, bound, spec)?;
            let rhs = s * transform(f, s, k, bound, spec)? - f(0.0);
            PropertyCheck::new(lhs, rhs)
        }
        LaplaceProperty::WeightedIntegral => {
            let h = |t: f64| integrate(f, 0.0, t, spec).value / lorentz(t);
            let lhs = transform(&h, s, k, bound, spec)?;
            let rhs = transform(f, s, k, bound, spec)? / s;
            PropertyCheck::new(lhs, rhs)
        }
        LaplaceProperty::LogMultiplication { n } => {
            if !(1..=2).contains(&n) {
                return Err(KappaError::Precondition(format!(
                    "log multiplication is implemented for n = 1, 2, got {n}"
                )));
            }
            let h = |t: f64| brace(t, k).powi(n as i32) * f(t);
            let lhs = transform(&h, s, k, bound, spec)?;
            // fourth-order central differences of F, Richardson-combined
            // over h and h/2, kept inside the abscissa
            let room = s - bound.abscissa(k);
            let h0 = (0.05 * s.abs().max(1.0)).min(0.2 * room);
            let fs = |x: f64| transform(f, x, k, bound, spec);
            let diff = |h: f64| -> Result<f64> {
                let (p2, p1, m1, m2) = (fs(s + 2.0 * h)?, fs(s + h)?, fs(s - h)?, fs(s - 2.0 * h)?);
                Ok(if n == 1 {
                    -(-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h)
                } else {
                    (-p2 + 16.0 * p1 - 30.0 * fs(s)? + 16.0 * m1 - m2) / (12.0 * h * h)
                })
            };
            let (coarse, fine) = (diff(h0)?, diff(0.5 * h0)?);
            let rhs = (16.0 * fine - coarse) / 15.0;
            PropertyCheck::new(lhs, rhs)
        }
        LaplaceProperty::LogDivision => {
            if f(0.0) != 0.0 {
                return Err(KappaError::Precondition(
                    "log division needs f(0) = 0".into(),
                ));
            }
            let h = |t: f64| if t == 0.0 { 0.0 } else { f(t) / brace(t, k) };
            let lhs = transform(&h, s, k, bound, spec)?;
            // ∫_s^∞ F(w) dw with w = s/z
            let outer = QuadratureSpec {
                rel_tol: spec.rel_tol.max(1e-10),
                ..*spec
            };
            let r = integrate(
                |z: f64| {
                    let w = s / z;
                    transform(f, w, k, bound, spec).unwrap_or(f64::NAN) * s / (z * z)
                },
                0.0,
                1.0,
                &outer,
            );
            PropertyCheck::new(lhs, r.into_value("log division")?)
        }
    };
    Ok(check)
}

const LADDER_RUNGS: usize = 6;

/// Richardson extrapolation to h = 0 of values at h_i = h_0/2^i.
/// Returns (estimate, change from the previous diagonal).
fn richardson(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    let mut table = vec![vec![0.0; n]; n];
    for i in 0..n {
        table[i][0] = values[i];
        let mut pow = 1.0;
        for j in 1..=i {
            pow *= 2.0;
            table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (pow - 1.0);
        }
    }
    let est = table[n - 1][n - 1];
    (est, (est - table[n - 2][n - 2]).abs())
}

fn ladder_limit(
    f: &dyn Fn(f64) -> f64,
    k: KappaParam,
    bound: GrowthBound,
    spec: &QuadratureSpec,
    rungs: impl Iterator<Item = f64>,
    what: &str,
) -> Result<f64> {
    let mut values = Vec::with_capacity(LADDER_RUNGS);
    for s in rungs {
        let r = laplace_kappa(f, s, k, bound, spec)?;
        if !r.converged {
            return Err(KappaError::LimitUndetermined(format!(
                "{what}: transform at s = {s} did not converge"
            )));
        }
        values.push(s * r.value);
    }
    let (est, change) = richardson(&values);
    if !est.is_finite() || change > 1e-3 * est.abs().max(1.0) {
        return Err(KappaError::LimitUndetermined(format!(
            "{what}: extrapolated ladder moves by {change:e}"
        )));
    }
    Ok(est)
}

/// f(0⁺) as lim_{s→∞} s F(s).
pub fn initial_value(
    f: &dyn Fn(f64) -> f64,
    k: KappaParam,
    bound: GrowthBound,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let s0 = 4.0 * bound.abscissa(k).max(1.0);
    ladder_limit(f, k, bound, spec, (0..LADDER_RUNGS).map(|j| s0 * (1u32 << j) as f64), "initial value")
}

/// lim_{t→∞} |κ| t f(t) as lim_{s→0⁺} s F(s) (for κ = 0, lim f(t)).
pub fn final_value(
    f: &dyn Fn(f64) -> f64,
    k: KappaParam,
    bound: GrowthBound,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let s0 = if k.is_zero() { 0.5 } else { k.value() };
    ladder_limit(f, k, bound, spec, (0..LADDER_RUNGS).map(|j| s0 / (1u32 << j) as f64), "final value")
}

/// (initial value, final value); each may fail independently.
pub fn limit_value_theorems(
    f: &dyn Fn(f64) -> f64,
    k: KappaParam,
    bound: GrowthBound,
    spec: &QuadratureSpec,
) -> (Result<f64>, Result<f64>) {
    (initial_value(f, k, bound, spec), final_value(f, k, bound, spec))
}

/// The Bessel-kernel integral next to the exp_κ value it should reproduce.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselCheck {
    pub integral: f64,
    pub reference: f64,
    pub residual: f64,
    pub error_estimate: f64,
    pub converged: bool,
}

/// ∫_0^∞ (1/(κx)) J_m(x/κ) e^{−sx} dx against exp_κ(−s), κ = 1/m.
///
/// With y = x/κ the integral is m ∫_0^∞ J_m(y)/y e^{−sy/m} dy, summed over
/// panels of length π and accelerated with the ε-algorithm.
pub fn bessel_kernel_check(s: f64, m: u32, spec: &QuadratureSpec) -> Result<BesselCheck> {
    check_finite("s", s)?;
    if s < 0.0 {
        return Err(KappaError::Input(format!("s must be >= 0, got {s}")));
    }
    if m == 0 {
        return Err(KappaError::Input("Bessel order m must be positive".into()));
    }
    let mf = m as f64;
    let k = KappaParam::new(1.0 / mf)?;
    let g = |y: f64| {
        if y == 0.0 {
            if m == 1 { 0.5 } else { 0.0 }
        } else {
            bessel_j(m, y) / y * (-s * y / mf).exp()
        }
    };
    let r = accelerated_panel_sum(
        |j| integrate(g, j as f64 * PI, (j + 1) as f64 * PI, spec),
        8,
        4000,
        spec.abs_tol.max(1e-13),
    )
    .scale(mf);
    let reference = exp_kappa(-s, k);
    Ok(BesselCheck {
        integral: r.value,
        reference,
        residual: (r.value - reference).abs(),
        error_estimate: r.error_estimate,
        converged: r.converged,
    })
}

/// f(t) from F(s) on the line Re s = c (experimental).
///
/// With u = {t}, g(u) = f([u]) cosh(κu) is the ordinary inverse of F, so
/// f(t) = g(u)/√(1+κ²t²) with g(u) = (2e^{cu}/π) ∫_0^∞ Re F(c+iω) cos(ωu) dω,
/// valid for real originals. The ω-integral is summed over half periods π/u
/// and accelerated with the ε-algorithm. F takes complex s.
pub fn inverse_laplace_kappa(
    big_f: &dyn Fn(Complex64) -> Complex64,
    t: f64,
    k: KappaParam,
    contour_abscissa: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    check_finite("t", t)?;
    check_finite("contour abscissa", contour_abscissa)?;
    if t <= 0.0 {
        return Err(KappaError::Input(format!("inverse transform needs t > 0, got {t}")));
    }
    let c = contour_abscissa;
    let u = brace(t, k);
    let step = PI / u;
    let g = |w: f64| big_f(Complex64::new(c, w)).re * (w * u).cos();
    let panel_spec = QuadratureSpec {
        rel_tol: spec.rel_tol.max(1e-11),
        ..*spec
    };
    let first = integrate(g, 0.0, step, &panel_spec);
    let tol = spec.abs_tol.max(1e-10 * first.value.abs());
    let r = accelerated_panel_sum(
        |j| {
            if j == 0 {
                first
            } else {
                integrate(g, j as f64 * step, (j + 1) as f64 * step, &panel_spec)
            }
        },
        8,
        4000,
        tol,
    );
    let scale = 2.0 * (c * u).exp() / PI / (k.value() * u).cosh();
    let out = r.scale(scale);
    if !out.value.is_finite() {
        return Err(KappaError::Quadrature {
            what: "inverse_laplace_kappa",
            residual: out.error_estimate,
        });
    }
    Ok(out)
}
