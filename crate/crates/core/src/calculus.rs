//! The κ-derivative √(1+κ²x²) d/dx, its inverse the κ-integral with measure
//! dx/√(1+κ²x²), and the relativistic kinetic energy.

use crate::algebra::{deform_inv, deform_map};
use crate::error::{check_finite, KappaError, Result};
use crate::param::{DeformKind, KappaParam};
use crate::quadrature::{integrate, integrate_to_infinity, QuadratureResult, QuadratureSpec, TailStrategy};

/// √(1+κ²x²).
pub fn lorentz_factor(x: f64, k: KappaParam) -> f64 {
    (k.value() * x).hypot(1.0)
}

/// The weight of the κ-derivative: √(1+κ²x²) or, for the cyclic family, √(1−κ²x²).
pub fn derivative_weight(x: f64, k: KappaParam, kind: DeformKind) -> Result<f64> {
    let u = k.value() * x;
    match kind {
        DeformKind::Hyperbolic => Ok(u.hypot(1.0)),
        DeformKind::Cyclic => {
            if u.abs() > 1.0 {
                return Err(KappaError::Domain {
                    what: "cyclic kappa-derivative",
                    value: x,
                    domain: "|x| <= 1/|kappa|".into(),
                });
            }
            Ok(((1.0 - u) * (1.0 + u)).sqrt())
        }
    }
}

/// Central difference with h = ε^{1/3}·max(1, |x|), which balances the O(h²)
/// truncation error against the O(ε/h) rounding error.
pub fn central_difference(f: &dyn Fn(f64) -> f64, x: f64) -> Result<f64> {
    let h0 = f64::EPSILON.cbrt() * x.abs().max(1.0);
    // make x ± h exactly representable
    let h = (x + h0) - x;
    let (fp, fm) = (f(x + h), f(x - h));
    if !(fp.is_finite() && fm.is_finite()) {
        return Err(KappaError::Input(format!(
            "function is not finite near x = {x}"
        )));
    }
    Ok((fp - fm) / (2.0 * h))
}

/// d f/d_κ x = √(1+κ²x²) f′(x), with f′ from `df` when given, otherwise by
/// central differences.
pub fn kappa_derivative(
    f: &dyn Fn(f64) -> f64,
    x: f64,
    k: KappaParam,
    df: Option<&dyn Fn(f64) -> f64>,
) -> Result<f64> {
    kappa_derivative_with(f, x, k, DeformKind::Hyperbolic, df)
}

/// κ-derivative for either family.
pub fn kappa_derivative_with(
    f: &dyn Fn(f64) -> f64,
    x: f64,
    k: KappaParam,
    kind: DeformKind,
    df: Option<&dyn Fn(f64) -> f64>,
) -> Result<f64> {
    check_finite("x", x)?;
    let w = derivative_weight(x, k, kind)?;
    let d = match df {
        Some(g) => g(x),
        None => central_difference(f, x)?,
    };
    if !d.is_finite() {
        return Err(KappaError::Input(format!("derivative is not finite at x = {x}")));
    }
    Ok(w * d)
}

/// Whether the κ-integral carries the measure dx/√(1+κ²x²) or is plain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Measure {
    /// d_κx = dx/√(1+κ²x²)
    #[default]
    Kappa,
    /// dx
    Plain,
}

/// ∫_a^b f(x) d_κx (or ∫ f dx with [`Measure::Plain`]). `b` may be +∞;
/// the tail is then handled according to `spec.tail`. Signed like the
/// ordinary integral.
pub fn kappa_integral(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    k: KappaParam,
    measure: Measure,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    check_finite("a", a)?;
    if b.is_nan() || b == f64::NEG_INFINITY {
        return Err(KappaError::Input(format!("upper limit must be finite or +inf, got {b}")));
    }
    let kv = k.value();
    if b.is_finite() {
        let r = match measure {
            Measure::Kappa => integrate(|x| f(x) / (kv * x).hypot(1.0), a, b, spec),
            Measure::Plain => integrate(f, a, b, spec),
        };
        return Ok(r);
    }
    let r = match spec.tail {
        TailStrategy::BraceSubstitution => {
            // u = {t}: d_κt = du, dt = cosh(κu) du
            let hyper = DeformKind::Hyperbolic;
            let u0 = deform_map(a, k, hyper)?;
            let t_of = move |u: f64| deform_inv(u, k, hyper).unwrap_or(f64::INFINITY);
            match measure {
                Measure::Kappa => integrate_to_infinity(|u| f(t_of(u)), u0, 1.0, spec),
                Measure::Plain => {
                    integrate_to_infinity(|u| f(t_of(u)) * (kv * u).cosh(), u0, 1.0, spec)
                }
            }
        }
        TailStrategy::ExponentialMap => match measure {
            Measure::Kappa => integrate_to_infinity(|x| f(x) / (kv * x).hypot(1.0), a, 1.0, spec),
            Measure::Plain => integrate_to_infinity(f, a, 1.0, spec),
        },
    };
    Ok(r)
}

/// W(x) = (√(1+κ²x²) − 1)/κ², evaluated as x²/(1 + √(1+κ²x²)), which
/// has no cancellation and gives x²/2 exactly at κ = 0.
pub fn kinetic_energy(x: f64, k: KappaParam) -> f64 {
    x * x / (1.0 + lorentz_factor(x, k))
}
