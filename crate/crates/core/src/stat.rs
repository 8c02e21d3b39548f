//! κ-entropy, the maximum-entropy distribution, the κ-statistical weight and
//! a log-log tail-exponent fit.

use std::cell::Cell;

use crate::error::{check_finite, KappaError, Result};
use crate::functions::{deformation_constants, exp_kappa, ln_kappa};
use crate::param::KappaParam;
use crate::quadrature::{integrate, integrate_to_infinity, combine, QuadratureResult, QuadratureSpec};

const SUM_TOL: f64 = 1e-12;

/// Probabilities of a finite set of states.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    weights: Vec<f64>,
}

impl DiscreteDistribution {
    /// Weights must be finite, nonnegative and sum to 1 within 1e-12.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(KappaError::Input("distribution needs at least one state".into()));
        }
        for &w in &weights {
            check_finite("weight", w)?;
            if w < 0.0 {
                return Err(KappaError::Domain {
                    what: "distribution weight",
                    value: w,
                    domain: "w >= 0".into(),
                });
            }
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > SUM_TOL {
            return Err(KappaError::Input(format!("weights sum to {total}, not 1")));
        }
        Ok(DiscreteDistribution { weights })
    }

    /// Rescales nonnegative weights to sum to 1.
    pub fn normalized(weights: Vec<f64>) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !(total > 0.0 && total.is_finite()) {
            return Err(KappaError::Input(format!("cannot normalize weights summing to {total}")));
        }
        Self::new(weights.into_iter().map(|w| w / total).collect())
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(KappaError::Input("distribution needs at least one state".into()));
        }
        Ok(DiscreteDistribution {
            weights: vec![1.0 / n as f64; n],
        })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// −y ln_κ y = (y^{1−κ} − y^{1+κ})/(2κ), with 0 at y = 0.
fn entropy_density(y: f64, k: KappaParam) -> f64 {
    if y == 0.0 {
        0.0
    } else {
        -y * ln_kappa(y, k).unwrap_or(f64::NAN)
    }
}

/// S_κ = Σ (p^{1−κ} − p^{1+κ})/(2κ); the Shannon entropy at κ = 0.
pub fn kappa_entropy_discrete(p: &DiscreteDistribution, k: KappaParam) -> Result<f64> {
    k.require_physical("kappa entropy")?;
    Ok(p.weights.iter().map(|&w| entropy_density(w, k)).sum())
}

/// S_κ = ∫_a^b (y^{1−κ} − y^{1+κ})/(2κ) dx. Either limit may be infinite.
pub fn kappa_entropy(
    y: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    k: KappaParam,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    k.require_physical("kappa entropy")?;
    if a.is_nan() || b.is_nan() || !(a <= b) {
        return Err(KappaError::Input(format!("need a <= b, got [{a}, {b}]")));
    }
    let negative = Cell::new(None);
    let density = |x: f64| {
        let v = y(x);
        if v < 0.0 {
            negative.set(Some(x));
            return 0.0;
        }
        entropy_density(v, k)
    };
    let r = match (a.is_finite(), b.is_finite()) {
        (true, true) => integrate(density, a, b, spec),
        (true, false) => integrate_to_infinity(density, a, 1.0, spec),
        (false, true) => integrate_to_infinity(|x| density(-x), -b, 1.0, spec),
        (false, false) => combine(
            integrate_to_infinity(|x| density(-x), 0.0, 1.0, spec),
            integrate_to_infinity(density, 0.0, 1.0, spec),
        ),
    };
    if let Some(x) = negative.get() {
        return Err(KappaError::Domain {
            what: "kappa entropy density",
            value: x,
            domain: "y(x) >= 0".into(),
        });
    }
    Ok(r)
}

/// y(x) = exp_κ(γ g(x))/ε, the stationary point of ∫ (−y ln_κ y + g y) dx.
pub fn maxent_distribution(g: &dyn Fn(f64) -> f64, x: f64, k: KappaParam) -> Result<f64> {
    let c = deformation_constants(k)?;
    let gx = g(x);
    check_finite("g(x)", gx)?;
    Ok(exp_kappa(c.gamma * gx, k) / c.epsilon)
}

/// |d/dy[y ln_κ y] − g(x)| at y = maxent_distribution(g, x, k), with the
/// derivative taken by a relative central difference.
pub fn stationarity_residual(g: &dyn Fn(f64) -> f64, x: f64, k: KappaParam) -> Result<f64> {
    let y = maxent_distribution(g, x, k)?;
    if !(y > 0.0 && y.is_finite()) {
        return Err(KappaError::Overflow {
            what: "maxent_distribution",
            argument: g(x),
        });
    }
    let phi = |z: f64| z * ln_kappa(z, k).unwrap_or(f64::NAN);
    let h = f64::EPSILON.cbrt() * y;
    let h = (y + h) - y;
    let d = (phi(y + h) - phi(y - h)) / (2.0 * h);
    Ok((d - g(x)).abs())
}

/// Inverse temperature, chemical potential and deformation of the weight
/// exp_κ(−β(E − μ)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatParams {
    pub beta: f64,
    pub mu: f64,
    pub kappa: KappaParam,
}

impl StatParams {
    pub fn new(beta: f64, mu: f64, kappa: KappaParam) -> Result<Self> {
        check_finite("beta", beta)?;
        check_finite("mu", mu)?;
        if beta <= 0.0 {
            return Err(KappaError::Domain {
                what: "inverse temperature",
                value: beta,
                domain: "beta > 0".into(),
            });
        }
        kappa.require_physical("statistical weight")?;
        Ok(StatParams { beta, mu, kappa })
    }
}

/// f = exp_κ(−βE + βμ). Boltzmann at low energy, ∝ E^{−1/κ} at high energy.
pub fn kappa_statistical_weight(e: f64, p: &StatParams) -> f64 {
    exp_kappa(p.beta * (p.mu - e), p.kappa)
}

/// Least-squares slope of ln f against ln E over the top decade of E.
///
/// Needs at least 10 points, E ascending and positive, spanning a decade,
/// f positive, and at least 3 points in the top decade.
pub fn tail_exponent_fit(e: &[f64], f: &[f64]) -> Result<f64> {
    if e.len() != f.len() {
        return Err(KappaError::Fit(format!("{} energies but {} values", e.len(), f.len())));
    }
    if e.len() < 10 {
        return Err(KappaError::Fit(format!("need at least 10 points, got {}", e.len())));
    }
    if e.windows(2).any(|w| !(w[0] < w[1])) || !(e[0] > 0.0) {
        return Err(KappaError::Fit("energies must be positive and strictly ascending".into()));
    }
    let e_max = e[e.len() - 1];
    if !e_max.is_finite() || e_max / e[0] < 10.0 {
        return Err(KappaError::Fit(format!(
            "energies span {:.3} decades, need at least 1",
            (e_max / e[0]).log10()
        )));
    }
    let cut = e_max / 10.0;
    let mut pts = Vec::new();
    for (&x, &y) in e.iter().zip(f) {
        if x >= cut {
            if !(y > 0.0 && y.is_finite()) {
                return Err(KappaError::Fit(format!("value {y} at E = {x} is not positive")));
            }
            pts.push((x.ln(), y.ln()));
        }
    }
    if pts.len() < 3 {
        return Err(KappaError::Fit(format!("only {} points in the top decade", pts.len())));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}
