//! Adaptive quadrature shared by every integral in the crate.
//!
//! Finite intervals use globally adaptive 7/15-point Gauss–Kronrod bisection
//! with the QUADPACK error rescaling. Semi-infinite ranges are cut into panels
//! of doubling width, each integrated adaptively, until a geometric estimate
//! of the remaining tail is below tolerance. Oscillatory tails are summed
//! panel by panel and accelerated with Wynn's ε-algorithm.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{KappaError, Result};

/// How an integral with an infinite upper limit is brought onto finite panels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailStrategy {
    /// Integrate in the deformed variable u = {t}, i.e. after the substitution
    /// y = (√(1+κ²t²) − |κ|t)² = e^{−2|κ|u}. Power-law tails t^{−p} become
    /// exponential decays e^{−κ(p−1)u}.
    #[default]
    BraceSubstitution,
    /// Integrate directly in t over panels [a + (2^j − 1), a + (2^{j+1} − 1)].
    ExponentialMap,
}

/// Tolerances and budget for an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub tail: TailStrategy,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            tail: TailStrategy::BraceSubstitution,
        }
    }
}

impl QuadratureSpec {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && abs_tol > 0.0) {
            return Err(KappaError::Input(format!(
                "tolerances must be positive (rel {rel_tol}, abs {abs_tol})"
            )));
        }
        if max_subdivisions == 0 {
            return Err(KappaError::Input("max_subdivisions must be >= 1".into()));
        }
        Ok(Self {
            rel_tol,
            abs_tol,
            max_subdivisions,
            tail: TailStrategy::default(),
        })
    }

    pub fn with_tail(mut self, tail: TailStrategy) -> Self {
        self.tail = tail;
        self
    }

    pub fn with_max_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n.max(1);
        self
    }

    fn target(&self, value: f64) -> f64 {
        (self.rel_tol * value.abs()).max(self.abs_tol)
    }
}

/// Value, error estimate and convergence flag of an integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub converged: bool,
    pub evaluations: usize,
}

impl QuadratureResult {
    pub fn zero() -> Self {
        Self {
            value: 0.0,
            error_estimate: 0.0,
            converged: true,
            evaluations: 0,
        }
    }

    /// The value, or a quadrature error carrying the residual estimate.
    pub fn into_value(self, what: &'static str) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(KappaError::Quadrature {
                what,
                residual: self.error_estimate,
            })
        }
    }

    pub fn negate(mut self) -> Self {
        self.value = -self.value;
        self
    }

    pub fn scale(mut self, c: f64) -> Self {
        self.value *= c;
        self.error_estimate *= c.abs();
        self
    }
}

// 7-point Gauss / 15-point Kronrod, positive half including the centre.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for XGK[1], XGK[3], XGK[5] and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One 15-point Kronrod evaluation with its embedded error estimate.
fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let h = half.abs();
    let value = res_k * half;
    let res_abs = res_abs * h;
    let res_asc = res_asc * h;
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

/// ∫_a^b f(x) dx, signed (a > b flips the sign).
pub fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> QuadratureResult {
    if a == b {
        return QuadratureResult::zero();
    }
    if a > b {
        return integrate(f, b, a, spec).negate();
    }
    if !(a.is_finite() && b.is_finite()) {
        return QuadratureResult {
            value: f64::NAN,
            error_estimate: f64::INFINITY,
            converged: false,
            evaluations: 0,
        };
    }

    let (v, e) = gk15(&mut f, a, b);
    let mut evaluations = 15;
    let mut total = v;
    let mut total_err = e;
    let mut heap = BinaryHeap::new();
    heap.push(Segment {
        a,
        b,
        value: v,
        error: e,
    });

    let mut splits = 1;
    while total_err > spec.target(total) && splits < spec.max_subdivisions {
        let Some(seg) = heap.pop() else { break };
        let mid = 0.5 * (seg.a + seg.b);
        if !(mid > seg.a && mid < seg.b) {
            // interval exhausted at machine resolution
            heap.push(seg);
            break;
        }
        let (v1, e1) = gk15(&mut f, seg.a, mid);
        let (v2, e2) = gk15(&mut f, mid, seg.b);
        evaluations += 30;
        total += v1 + v2 - seg.value;
        total_err += e1 + e2 - seg.error;
        heap.push(Segment {
            a: seg.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Segment {
            a: mid,
            b: seg.b,
            value: v2,
            error: e2,
        });
        splits += 1;
    }

    // re-sum to shed the drift of the running updates
    let (mut value, mut error) = (0.0, 0.0);
    for seg in heap.iter() {
        value += seg.value;
        error += seg.error;
    }
    let converged = value.is_finite() && error <= spec.target(value);
    QuadratureResult {
        value,
        error_estimate: error,
        converged,
        evaluations,
    }
}

const MAX_PANELS: u32 = 70;

/// ∫_a^∞ f(x) dx over panels of doubling width starting at `width`.
pub fn integrate_to_infinity<F: FnMut(f64) -> f64>(
    f: F,
    a: f64,
    width: f64,
    spec: &QuadratureSpec,
) -> QuadratureResult {
    integrate_doubling(f, a, width, f64::INFINITY, spec)
}

/// Like [`integrate_to_infinity`], but the panels are clipped at `end`, past
/// which f is taken to vanish.
pub fn integrate_doubling<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    width: f64,
    end: f64,
    spec: &QuadratureSpec,
) -> QuadratureResult {
    let mut sum = 0.0;
    let mut err = 0.0;
    let mut evaluations = 0;
    let mut all_converged = true;
    let mut lo = a;
    let mut w = width;
    let mut prev: Option<f64> = None;
    let mut quiet = 0;
    // each panel gets a slice of the absolute tolerance
    let panel_spec = QuadratureSpec {
        abs_tol: spec.abs_tol / 4.0,
        ..*spec
    };
    for _ in 0..MAX_PANELS {
        if lo >= end {
            return QuadratureResult {
                value: sum,
                error_estimate: err,
                converged: all_converged && err <= spec.target(sum),
                evaluations,
            };
        }
        let hi = (lo + w).min(end);
        let r = integrate(&mut f, lo, hi, &panel_spec);
        evaluations += r.evaluations;
        if !r.value.is_finite() {
            return QuadratureResult {
                value: sum,
                error_estimate: f64::INFINITY,
                converged: false,
                evaluations,
            };
        }
        all_converged &= r.converged;
        sum += r.value;
        err += r.error_estimate;
        let p = r.value.abs();
        let tail = match prev {
            Some(q) if q > 0.0 && p < q => {
                let ratio = p / q;
                p * ratio / (1.0 - ratio)
            }
            Some(_) if p == 0.0 => 0.0,
            _ => f64::INFINITY,
        };
        if tail <= 0.25 * spec.target(sum) && p <= spec.target(sum) {
            quiet += 1;
            if quiet >= 2 {
                return QuadratureResult {
                    value: sum,
                    error_estimate: err + tail,
                    converged: all_converged && err + tail <= spec.target(sum),
                    evaluations,
                };
            }
        } else {
            quiet = 0;
        }
        prev = Some(p);
        lo = hi;
        w *= 2.0;
    }
    QuadratureResult {
        value: sum,
        error_estimate: err + prev.unwrap_or(f64::INFINITY),
        converged: false,
        evaluations,
    }
}

/// ∫_0^b u^{p−1} g(u) du for p > 0 and smooth g. When p < 1 the
/// integrable endpoint singularity is removed by z = u^p on [0, min(b, 1)].
pub fn integrate_power_weighted<G: FnMut(f64) -> f64>(
    mut g: G,
    p: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> QuadratureResult {
    if b <= 0.0 {
        return QuadratureResult::zero();
    }
    let head_end = b.min(1.0);
    let head = if p < 1.0 {
        integrate(|z: f64| g(z.powf(1.0 / p)), 0.0, head_end.powf(p), spec).scale(1.0 / p)
    } else {
        integrate(|u: f64| u.powf(p - 1.0) * g(u), 0.0, head_end, spec)
    };
    if b <= 1.0 {
        return head;
    }
    let rest = if b.is_finite() {
        integrate(|u: f64| u.powf(p - 1.0) * g(u), 1.0, b, spec)
    } else {
        integrate_to_infinity(|u: f64| u.powf(p - 1.0) * g(u), 1.0, 1.0, spec)
    };
    combine(head, rest)
}

/// Sum of two adjacent pieces.
pub fn combine(a: QuadratureResult, b: QuadratureResult) -> QuadratureResult {
    QuadratureResult {
        value: a.value + b.value,
        error_estimate: a.error_estimate + b.error_estimate,
        converged: a.converged && b.converged,
        evaluations: a.evaluations + b.evaluations,
    }
}

/// Wynn's ε-algorithm on a sequence of partial sums: (limit estimate, error estimate).
pub fn wynn_epsilon(sums: &[f64]) -> (f64, f64) {
    let n = sums.len();
    if n == 0 {
        return (f64::NAN, f64::INFINITY);
    }
    if n < 3 {
        let last = sums[n - 1];
        let err = if n == 2 { (sums[1] - sums[0]).abs() } else { f64::INFINITY };
        return (last, err);
    }
    // table[k] holds column k of the ε table; even columns are estimates
    let mut prev_col: Vec<f64> = vec![0.0; n + 1];
    let mut col: Vec<f64> = sums.to_vec();
    let mut best = sums[n - 1];
    let mut best_err = (sums[n - 1] - sums[n - 2]).abs();
    let mut k = 0;
    while col.len() > 1 {
        let mut next = Vec::with_capacity(col.len() - 1);
        for i in 0..col.len() - 1 {
            let d = col[i + 1] - col[i];
            let base = prev_col[i + 1];
            next.push(if d == 0.0 { f64::INFINITY } else { base + 1.0 / d });
        }
        k += 1;
        if k % 2 == 0 && next.len() >= 2 {
            let m = next.len();
            let (a, b) = (next[m - 1], next[m - 2]);
            if a.is_finite() && b.is_finite() {
                let e = (a - b).abs();
                if e < best_err {
                    best = a;
                    best_err = e;
                }
            }
        }
        prev_col = col;
        col = next;
        if !col.iter().all(|v| v.is_finite()) {
            break;
        }
    }
    (best, best_err)
}

/// Sums Σ_j panel(j) for an alternating/oscillatory series of panel integrals,
/// accelerating the partial sums with the ε-algorithm. Stops once two
/// consecutive accelerated estimates agree within `tol`.
pub fn accelerated_panel_sum<P: FnMut(usize) -> QuadratureResult>(
    mut panel: P,
    min_panels: usize,
    max_panels: usize,
    tol: f64,
) -> QuadratureResult {
    let mut partial = Vec::new();
    let mut sum = 0.0;
    let mut quad_err = 0.0;
    let mut evaluations = 0;
    let mut converged_panels = true;
    let mut last_est = f64::NAN;
    let mut agree = 0;
    for j in 0..max_panels {
        let r = panel(j);
        evaluations += r.evaluations;
        converged_panels &= r.converged;
        sum += r.value;
        quad_err += r.error_estimate;
        partial.push(sum);
        if partial.len() >= min_panels {
            // a sliding window keeps the ε table small
            let start = partial.len().saturating_sub(24);
            let (est, est_err) = wynn_epsilon(&partial[start..]);
            if (est - last_est).abs() <= tol && est_err <= 10.0 * tol {
                agree += 1;
                if agree >= 2 {
                    return QuadratureResult {
                        value: est,
                        error_estimate: est_err.max((est - last_est).abs()) + quad_err,
                        converged: converged_panels,
                        evaluations,
                    };
                }
            } else {
                agree = 0;
            }
            last_est = est;
        }
    }
    let start = partial.len().saturating_sub(24);
    let (est, est_err) = wynn_epsilon(&partial[start..]);
    QuadratureResult {
        value: est,
        error_estimate: est_err + quad_err,
        converged: false,
        evaluations,
    }
}
