//! κ-hyperbolic and κ-cyclic trigonometry. Direct functions are ordinary
//! trigonometric functions of the deformed argument {x}.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::algebra::{deform_inv, deform_map};
use crate::error::{check_finite, KappaError, Result};
use crate::param::{DeformKind, KappaParam};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrigFunction {
    Sin,
    Cos,
    Tan,
    Cot,
}

/// Family and function; for the hyperbolic family Sin/Cos/Tan/Cot mean
/// sinh_κ/cosh_κ/tanh_κ/coth_κ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrigSelector {
    pub family: DeformKind,
    pub function: TrigFunction,
}

impl TrigSelector {
    pub const SINH: Self = Self::new(DeformKind::Hyperbolic, TrigFunction::Sin);
    pub const COSH: Self = Self::new(DeformKind::Hyperbolic, TrigFunction::Cos);
    pub const TANH: Self = Self::new(DeformKind::Hyperbolic, TrigFunction::Tan);
    pub const COTH: Self = Self::new(DeformKind::Hyperbolic, TrigFunction::Cot);
    pub const SIN: Self = Self::new(DeformKind::Cyclic, TrigFunction::Sin);
    pub const COS: Self = Self::new(DeformKind::Cyclic, TrigFunction::Cos);
    pub const TAN: Self = Self::new(DeformKind::Cyclic, TrigFunction::Tan);
    pub const COT: Self = Self::new(DeformKind::Cyclic, TrigFunction::Cot);

    pub const fn new(family: DeformKind, function: TrigFunction) -> Self {
        Self { family, function }
    }
}

fn pole(at: f64) -> KappaError {
    KappaError::Pole {
        what: "kappa tangent/cotangent",
        at,
    }
}

/// Distance of θ from the nearest point of offset + nπ, relative to |θ|.
fn near_lattice(theta: f64, offset: f64) -> bool {
    let n = ((theta - offset) / PI).round();
    let d = theta - (offset + n * PI);
    d.abs() <= 4.0 * f64::EPSILON * theta.abs().max(1.0)
}

pub fn trig_kappa(x: f64, k: KappaParam, sel: TrigSelector) -> Result<f64> {
    check_finite("x", x)?;
    let th = deform_map(x, k, sel.family)?;
    let v = match (sel.family, sel.function) {
        (DeformKind::Hyperbolic, TrigFunction::Sin) => th.sinh(),
        (DeformKind::Hyperbolic, TrigFunction::Cos) => th.cosh(),
        (DeformKind::Hyperbolic, TrigFunction::Tan) => th.tanh(),
        (DeformKind::Hyperbolic, TrigFunction::Cot) => {
            if th == 0.0 {
                return Err(pole(x));
            }
            1.0 / th.tanh()
        }
        (DeformKind::Cyclic, TrigFunction::Sin) => th.sin(),
        (DeformKind::Cyclic, TrigFunction::Cos) => th.cos(),
        (DeformKind::Cyclic, TrigFunction::Tan) => {
            if near_lattice(th, FRAC_PI_2) {
                return Err(pole(x));
            }
            th.tan()
        }
        (DeformKind::Cyclic, TrigFunction::Cot) => {
            if near_lattice(th, 0.0) {
                return Err(pole(x));
            }
            1.0 / th.tan()
        }
    };
    if !v.is_finite() {
        return Err(KappaError::Overflow {
            what: "trig_kappa",
            argument: th,
        });
    }
    Ok(v)
}

fn inverse_domain(x: f64, domain: &str) -> KappaError {
    KappaError::Domain {
        what: "inverse_trig_kappa",
        value: x,
        domain: domain.into(),
    }
}

/// Inverse κ-trigonometric functions.
///
/// Hyperbolic inverses are the ln_κ closed forms, e.g.
/// arcsinh_κ(x) = ln_κ(√(1+x²) + x) = ln_κ(e^{arcsinh x}); the ordinary inverse
/// supplies the logarithm so both tails stay accurate. Cyclic inverses are
/// sin(κθ)/κ with θ the ordinary inverse, valid while |κθ| ≤ π/2.
pub fn inverse_trig_kappa(x: f64, k: KappaParam, sel: TrigSelector) -> Result<f64> {
    check_finite("x", x)?;
    let theta = match (sel.family, sel.function) {
        (DeformKind::Hyperbolic, TrigFunction::Sin) => x.asinh(),
        (DeformKind::Hyperbolic, TrigFunction::Cos) => {
            if x < 1.0 {
                return Err(inverse_domain(x, "x >= 1"));
            }
            x.acosh()
        }
        (DeformKind::Hyperbolic, TrigFunction::Tan) => {
            if x.abs() >= 1.0 {
                return Err(inverse_domain(x, "|x| < 1"));
            }
            x.atanh()
        }
        (DeformKind::Hyperbolic, TrigFunction::Cot) => {
            if x.abs() <= 1.0 {
                return Err(inverse_domain(x, "|x| > 1"));
            }
            // ln_κ √((x+1)/(x−1))
            (1.0 / x).atanh()
        }
        (DeformKind::Cyclic, f) => {
            let theta = match f {
                TrigFunction::Sin | TrigFunction::Cos if x.abs() > 1.0 => {
                    return Err(inverse_domain(x, "|x| <= 1"));
                }
                TrigFunction::Sin => x.asin(),
                TrigFunction::Cos => x.acos(),
                TrigFunction::Tan => x.atan(),
                TrigFunction::Cot if x == 0.0 => FRAC_PI_2,
                TrigFunction::Cot => (1.0 / x).atan(),
            };
            if k.value() * theta.abs() > FRAC_PI_2 {
                return Err(inverse_domain(
                    x,
                    "|kappa * theta| <= pi/2 for the ordinary inverse theta",
                ));
            }
            return deform_inv(theta, k, DeformKind::Cyclic);
        }
    };
    deform_inv(theta, k, DeformKind::Hyperbolic)
}

/// (cosh_κ(x) + sign·sinh_κ(x))^r, checked against cosh_{κ/r}(rx) + sign·sinh_{κ/r}(rx).
pub fn de_moivre_kappa(x: f64, k: KappaParam, r: f64, sign: i8) -> Result<f64> {
    check_finite("x", x)?;
    check_finite("r", r)?;
    if sign != 1 && sign != -1 {
        return Err(KappaError::Input(format!("sign must be +1 or -1, got {sign}")));
    }
    let sg = sign as f64;
    let lhs = (trig_kappa(x, k, TrigSelector::COSH)? + sg * trig_kappa(x, k, TrigSelector::SINH)?)
        .powf(r);
    let ks = k.scaled(r)?;
    let rx = r * x;
    let rhs = trig_kappa(rx, ks, TrigSelector::COSH)? + sg * trig_kappa(rx, ks, TrigSelector::SINH)?;
    let dev = ((lhs - rhs) / rhs).abs();
    if !(dev <= 1e-11) {
        return Err(KappaError::Precondition(format!(
            "De Moivre sides disagree: {lhs} vs {rhs} (relative {dev:e})"
        )));
    }
    Ok(lhs)
}
