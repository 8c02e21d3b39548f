//! The isomorphism maps {x}, [x] and the κ-sum / κ-product field.
//!
//! In the hyperbolic family {x} = arcsinh(κx)/κ and [x] = sinh(κx)/κ; in the
//! cyclic family {x} = arcsin(κx)/κ, defined for |x| ≤ 1/κ, and
//! [x] = sin(κx)/κ. The κ-sum and κ-product are the images of ordinary `+`
//! and `×` under these maps. κ = 0 short-circuits to ordinary arithmetic.

use crate::error::{check_finite, KappaError, Result};
use crate::param::{DeformKind, KappaParam};

/// Below this |κx| the ratio functions are evaluated by their Maclaurin series.
const SERIES_CUTOFF: f64 = 1e-4;

/// Slack allowed on the cyclic boundary |κx| = 1.
const CYCLIC_SLACK: f64 = 4.0 * f64::EPSILON;

/// arcsinh(u)/u
fn asinh_ratio(u: f64) -> f64 {
    if u.abs() < SERIES_CUTOFF {
        let u2 = u * u;
        1.0 - u2 / 6.0 + 3.0 * u2 * u2 / 40.0
    } else {
        u.asinh() / u
    }
}

/// arcsin(u)/u
fn asin_ratio(u: f64) -> f64 {
    if u.abs() < SERIES_CUTOFF {
        let u2 = u * u;
        1.0 + u2 / 6.0 + 3.0 * u2 * u2 / 40.0
    } else {
        u.asin() / u
    }
}

/// sinh(u)/u
fn sinh_ratio(u: f64) -> f64 {
    if u.abs() < SERIES_CUTOFF {
        let u2 = u * u;
        1.0 + u2 / 6.0 + u2 * u2 / 120.0
    } else {
        u.sinh() / u
    }
}

/// sin(u)/u
fn sin_ratio(u: f64) -> f64 {
    if u.abs() < SERIES_CUTOFF {
        let u2 = u * u;
        1.0 - u2 / 6.0 + u2 * u2 / 120.0
    } else {
        u.sin() / u
    }
}

/// Clamps κx onto [-1, 1] within rounding slack, or reports the cyclic domain violation.
fn cyclic_arg(x: f64, k: KappaParam) -> Result<f64> {
    let u = k.value() * x;
    if u.abs() <= 1.0 {
        Ok(u)
    } else if u.abs() <= 1.0 + CYCLIC_SLACK {
        Ok(u.signum())
    } else {
        Err(KappaError::Domain {
            what: "cyclic deformation",
            value: x,
            domain: format!("|x| <= 1/kappa = {}", 1.0 / k.value()),
        })
    }
}

/// The map {x}.
pub fn deform_map(x: f64, k: KappaParam, kind: DeformKind) -> Result<f64> {
    check_finite("x", x)?;
    if k.is_zero() {
        return Ok(x);
    }
    match kind {
        DeformKind::Hyperbolic => Ok(x * asinh_ratio(k.value() * x)),
        DeformKind::Cyclic => {
            let u = cyclic_arg(x, k)?;
            if u.abs() == 1.0 {
                // boundary point: arcsin(±1) = ±π/2 exactly
                Ok(u * std::f64::consts::FRAC_PI_2 / k.value())
            } else {
                Ok(x * asin_ratio(u))
            }
        }
    }
}

/// The inverse map [x].
pub fn deform_inv(x: f64, k: KappaParam, kind: DeformKind) -> Result<f64> {
    check_finite("x", x)?;
    if k.is_zero() {
        return Ok(x);
    }
    let u = k.value() * x;
    let v = match kind {
        DeformKind::Hyperbolic => x * sinh_ratio(u),
        DeformKind::Cyclic => x * sin_ratio(u),
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(KappaError::Overflow {
            what: "[x]",
            argument: u,
        })
    }
}

/// The κ-sum x ⊕ y.
pub fn kappa_sum(x: f64, y: f64, k: KappaParam, kind: DeformKind) -> Result<f64> {
    check_finite("x", x)?;
    check_finite("y", y)?;
    if k.is_zero() {
        return Ok(x + y);
    }
    let kv = k.value();
    match kind {
        DeformKind::Hyperbolic => Ok(x * 1f64.hypot(kv * y) + y * 1f64.hypot(kv * x)),
        DeformKind::Cyclic => {
            let u = cyclic_arg(x, k)?;
            let v = cyclic_arg(y, k)?;
            let cx = ((1.0 - u) * (1.0 + u)).sqrt();
            let cy = ((1.0 - v) * (1.0 + v)).sqrt();
            Ok(x * cy + y * cx)
        }
    }
}

/// The κ-difference x ⊖ y = x ⊕ (−y).
pub fn kappa_diff(x: f64, y: f64, k: KappaParam, kind: DeformKind) -> Result<f64> {
    kappa_sum(x, -y, k, kind)
}

/// The κ-product x ⊗ y = (1/κ)·sinh(arcsinh(κx)·arcsinh(κy)/κ).
///
/// The cyclic product evaluates sin of the composed argument as-is, so for
/// |arcsin(κx)·arcsin(κy)/κ| > π/2 the result leaves the principal branch of
/// {·} and the isomorphism no longer holds.
pub fn kappa_prod(x: f64, y: f64, k: KappaParam, kind: DeformKind) -> Result<f64> {
    check_finite("x", x)?;
    check_finite("y", y)?;
    if k.is_zero() {
        return Ok(x * y);
    }
    let kv = k.value();
    match kind {
        DeformKind::Hyperbolic => {
            let arg = (kv * x).asinh() * (kv * y).asinh() / kv;
            // sinh(arg)/κ overflows once |arg| > ln(2·MAX·κ)
            let limit = f64::MAX.ln() + std::f64::consts::LN_2 + kv.ln();
            if !(arg.abs() <= limit) {
                return Err(KappaError::Overflow {
                    what: "kappa product",
                    argument: arg,
                });
            }
            let v = arg.sinh() / kv;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(KappaError::Overflow {
                    what: "kappa product",
                    argument: arg,
                })
            }
        }
        DeformKind::Cyclic => {
            let u = cyclic_arg(x, k)?;
            let v = cyclic_arg(y, k)?;
            Ok((u.asin() * v.asin() / kv).sin() / kv)
        }
    }
}

/// The neutral element of ⊗, I = [1] = sinh(κ)/κ (sin(κ)/κ in the cyclic family).
pub fn kappa_unit(k: KappaParam, kind: DeformKind) -> f64 {
    // sinh(κ)/κ only overflows for |κ| > ~710
    deform_inv(1.0, k, kind).unwrap_or(f64::INFINITY)
}

/// The ⊗-inverse x̄ = [1/{x}], so that x ⊗ x̄ = I.
pub fn kappa_inverse(x: f64, k: KappaParam, kind: DeformKind) -> Result<f64> {
    let mx = deform_map(x, k, kind)?;
    if mx == 0.0 {
        return Err(KappaError::Domain {
            what: "kappa inverse",
            value: x,
            domain: "x != 0".into(),
        });
    }
    deform_inv(1.0 / mx, k, kind)
}

/// The κ-division x ⊘ y = x ⊗ ȳ.
pub fn kappa_div(x: f64, y: f64, k: KappaParam, kind: DeformKind) -> Result<f64> {
    if k.is_zero() {
        check_finite("x", x)?;
        check_finite("y", y)?;
        if y == 0.0 {
            return Err(KappaError::Domain {
                what: "kappa division",
                value: y,
                domain: "y != 0".into(),
            });
        }
        return Ok(x / y);
    }
    let inv = kappa_inverse(y, k, kind)?;
    kappa_prod(x, inv, k, kind)
}

/// The n-fold κ-sum x ⊕ x ⊕ … ⊕ x, computed as [n·{x}].
///
/// For the hyperbolic family this equals [n] ⊗ x. The cyclic version is
/// obtained through the same isomorphism and is valid while n·{x} stays on
/// the principal branch.
pub fn kappa_nfold_sum(n: u32, x: f64, k: KappaParam, kind: DeformKind) -> Result<f64> {
    if n == 0 {
        check_finite("x", x)?;
        return Ok(0.0);
    }
    if n == 1 {
        check_finite("x", x)?;
        return Ok(x);
    }
    let mx = deform_map(x, k, kind)?;
    deform_inv(n as f64 * mx, k, kind)
}
