//! exp_κ and ln_κ, the deformation constants, the ξ_n polynomials with the
//! κ-factorial, and the series representations of exp_κ and ln_κ.

use crate::algebra::{deform_inv, deform_map};
use crate::error::{check_finite, KappaError, Result};
use crate::param::{DeformKind, KappaParam};

/// exp_κ(x) = exp({x}). Evaluated in log-space; overflow gives +∞.
pub fn exp_kappa(x: f64, k: KappaParam) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_infinite() {
        return if x > 0.0 { f64::INFINITY } else { 0.0 };
    }
    let arg = deform_map(x, k, DeformKind::Hyperbolic).expect("hyperbolic map is total");
    arg.exp()
}

/// exp_κ(x) with overflow reported as an error.
pub fn exp_kappa_checked(x: f64, k: KappaParam) -> Result<f64> {
    check_finite("x", x)?;
    let v = exp_kappa(x, k);
    if v.is_infinite() {
        return Err(KappaError::Overflow {
            what: "exp_kappa",
            argument: deform_map(x, k, DeformKind::Hyperbolic)?,
        });
    }
    Ok(v)
}

/// ln_κ(x) = sinh(κ ln x)/κ for x > 0.
pub fn ln_kappa(x: f64, k: KappaParam) -> Result<f64> {
    check_finite("x", x)?;
    if x <= 0.0 {
        return Err(KappaError::Domain {
            what: "ln_kappa",
            value: x,
            domain: "x > 0".into(),
        });
    }
    if x == 1.0 {
        return Ok(0.0);
    }
    deform_inv(x.ln(), k, DeformKind::Hyperbolic)
}

/// γ = 1/√(1−κ²) and the κ-Napier number ε = ((1+κ)/(1−κ))^{1/2κ}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationConstants {
    pub gamma: f64,
    pub epsilon: f64,
}

pub fn deformation_constants(k: KappaParam) -> Result<DeformationConstants> {
    k.require_physical("deformation_constants")?;
    let kv = k.value();
    let gamma = 1.0 / ((1.0 - kv) * (1.0 + kv)).sqrt();
    // ln ε = atanh(κ)/κ
    let ln_eps = if kv < 1e-4 {
        let k2 = kv * kv;
        1.0 + k2 / 3.0 + k2 * k2 / 5.0
    } else {
        kv.atanh() / kv
    };
    Ok(DeformationConstants {
        gamma,
        epsilon: ln_eps.exp(),
    })
}

/// ξ_n(κ) from ξ_0 = ξ_1 = 1, ξ_{n+2} = (1 − n²κ²) ξ_n.
pub fn xi_poly(n: u32, k: KappaParam) -> f64 {
    let k2 = k.value() * k.value();
    let mut xi = 1.0;
    let mut m = n % 2;
    while m + 2 <= n {
        let mf = m as f64;
        xi *= 1.0 - mf * mf * k2;
        m += 2;
    }
    xi
}

/// ξ_0 … ξ_N for one κ.
#[derive(Debug, Clone, PartialEq)]
pub struct XiPolynomialTable {
    kappa: KappaParam,
    values: Vec<f64>,
}

impl XiPolynomialTable {
    pub fn new(k: KappaParam, max_order: u32) -> Self {
        let k2 = k.value() * k.value();
        let len = max_order as usize + 1;
        let mut values = Vec::with_capacity(len);
        for n in 0..len {
            let v = if n < 2 {
                1.0
            } else {
                let m = (n - 2) as f64;
                values[n - 2] * (1.0 - m * m * k2)
            };
            values.push(v);
        }
        Self { kappa: k, values }
    }

    pub fn kappa(&self) -> KappaParam {
        self.kappa
    }

    pub fn get(&self, n: u32) -> Option<f64> {
        self.values.get(n as usize).copied()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest N with N < 2 + 1/|κ|; ξ_n > 0 for every n ≤ N.
    /// None when κ = 0 (every ξ_n is 1).
    pub fn max_positive_order(k: KappaParam) -> Option<u64> {
        if k.is_zero() {
            return None;
        }
        let bound = 2.0 + 1.0 / k.value();
        let mut n = bound.floor();
        if n >= bound {
            n -= 1.0;
        }
        Some(n as u64)
    }
}

/// n!_κ = n!/ξ_n(κ).
pub fn kappa_factorial(n: u32, k: KappaParam) -> Result<f64> {
    // ξ_n holds the factors (1 − m²κ²) for m ≡ n (mod 2), 1 ≤ m ≤ n − 2
    let kv = k.value();
    let mut m = if n % 2 == 0 { 2 } else { 1 };
    while m + 2 <= n {
        if (kv * m as f64 - 1.0).abs() < 4.0 * f64::EPSILON {
            return Err(KappaError::FactorialPole { n, m });
        }
        m += 2;
    }
    let mut fact = 1.0;
    for j in 2..=n {
        fact *= j as f64;
    }
    Ok(fact / xi_poly(n, k))
}

/// A truncated series value and the number of terms actually summed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms: u32,
}

/// Σ_{n=0}^{N} xⁿ/n!_κ, valid for κ²x² < 1.
///
/// Stops early once two consecutive terms drop below unit roundoff relative
/// to the running sum.
pub fn exp_kappa_taylor(x: f64, k: KappaParam, order: u32) -> Result<SeriesValue> {
    check_finite("x", x)?;
    let kv = k.value();
    if (kv * x).abs() >= 1.0 {
        return Err(KappaError::ConvergenceDomain {
            what: "exp_kappa Taylor series",
            value: x,
        });
    }
    let k2 = kv * kv;
    let x2 = x * x;
    // t_{n+2} = t_n · x²(1 − n²κ²)/((n+1)(n+2))
    let mut chain = [1.0, x];
    let mut sum = 0.0;
    let mut small = 0;
    let mut terms = 0;
    for n in 0..=order {
        let slot = (n % 2) as usize;
        let t = chain[slot];
        sum += t;
        terms = n + 1;
        let nf = n as f64;
        chain[slot] = t * x2 * (1.0 - nf * nf * k2) / ((nf + 1.0) * (nf + 2.0));
        if t.abs() <= f64::EPSILON * sum.abs() {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
    }
    Ok(SeriesValue { value: sum, terms })
}

/// Coefficient b_n(κ) of the ln_κ(1+x) series; b_1 = 1.
pub fn ln_kappa_series_coefficient(n: u32, k: KappaParam) -> f64 {
    let kv = k.value();
    let (mut minus, mut plus) = (1.0, 1.0);
    for j in 1..n {
        let q = kv / j as f64;
        minus *= 1.0 - q;
        plus *= 1.0 + q;
    }
    0.5 * (minus + plus)
}

/// Σ_{n=1}^{N} b_n(κ)(−1)^{n−1} xⁿ/n, approximating ln_κ(1 + x) for −1 < x ≤ 1.
pub fn ln_kappa_taylor(x: f64, k: KappaParam, order: u32) -> Result<SeriesValue> {
    check_finite("x", x)?;
    if !(x > -1.0 && x <= 1.0) {
        return Err(KappaError::ConvergenceDomain {
            what: "ln_kappa Taylor series",
            value: x,
        });
    }
    let kv = k.value();
    let (mut minus, mut plus) = (1.0, 1.0);
    let mut pw = x;
    let mut sum = 0.0;
    let mut small = 0;
    let mut terms = 0;
    for n in 1..=order {
        let nf = n as f64;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let t = sign * 0.5 * (minus + plus) * pw / nf;
        sum += t;
        terms = n;
        if t.abs() <= f64::EPSILON * sum.abs() {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
        minus *= 1.0 - kv / nf;
        plus *= 1.0 + kv / nf;
        pw *= x;
    }
    Ok(SeriesValue { value: sum, terms })
}

/// c_n = (−1)ⁿ (2n)! / ((2n+1) 2^{2n} (n!)²), the arcsinh series coefficients.
pub fn product_expansion_coefficient(n: u32) -> f64 {
    let mut central = 1.0;
    for j in 1..=n {
        let jf = j as f64;
        central *= (2.0 * jf - 1.0) / (2.0 * jf);
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign * central / (2.0 * n as f64 + 1.0)
}

/// Π_{n=0}^{N} exp(c_n κ^{2n} x^{2n+1}), valid for κ²x² ≤ 1.
pub fn exp_kappa_product_expansion(x: f64, k: KappaParam, order: u32) -> Result<f64> {
    check_finite("x", x)?;
    let kv = k.value();
    let u2 = (kv * x) * (kv * x);
    if u2 > 1.0 {
        return Err(KappaError::ConvergenceDomain {
            what: "exp_kappa product expansion",
            value: x,
        });
    }
    let mut prod = 1.0;
    // κ^{2n} x^{2n+1}
    let mut pw = x;
    for n in 0..=order {
        prod *= (product_expansion_coefficient(n) * pw).exp();
        pw *= u2;
        if pw == 0.0 {
            break;
        }
    }
    Ok(prod)
}
