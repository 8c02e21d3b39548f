//! Ordinary special functions the κ-family is built on: Γ with sign tracking,
//! an overflow-safe Γ ratio, Beta, complex log-Γ and Bessel J of integer order.

use std::f64::consts::PI;

use num_complex::Complex64;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln(√(2π))
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// sin(πx) with exact zeros at the integers.
fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r == 0.5 {
        return 1.0;
    }
    if r == 1.5 {
        return -1.0;
    }
    (PI * r).sin()
}

/// ln Γ(x) for x ≥ 0.5 (Lanczos, g = 7).
fn ln_gamma_lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    LN_SQRT_2PI + (x + 0.5) * t.ln() - t + a.ln()
}

/// ln|Γ(x)| together with the sign of Γ(x). `None` at the poles x = 0, −1, −2, …
pub fn ln_gamma_signed(x: f64) -> Option<(f64, f64)> {
    if x.is_nan() {
        return None;
    }
    if x >= 0.5 {
        return Some((ln_gamma_lanczos(x), 1.0));
    }
    if x == x.floor() {
        return None;
    }
    // reflection Γ(x)Γ(1−x) = π / sin(πx)
    let s = sin_pi(x);
    let lg = PI.ln() - s.abs().ln() - ln_gamma_lanczos(1.0 - x);
    Some((lg, s.signum()))
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    match ln_gamma_signed(x) {
        Some((lg, s)) if s > 0.0 => lg,
        _ => f64::NAN,
    }
}

/// Γ(x); NaN at the poles, ±∞ past the overflow threshold.
pub fn gamma(x: f64) -> f64 {
    if x == x.floor() && (1.0..=23.0).contains(&x) {
        // exact factorials
        let mut f = 1.0;
        for i in 2..(x as u32) {
            f *= i as f64;
        }
        return f;
    }
    match ln_gamma_signed(x) {
        Some((lg, s)) => s * lg.exp(),
        None => f64::NAN,
    }
}

/// Stirling correction terms Σ B_{2k} / (2k(2k−1) z^{2k−1}).
fn stirling_tail(z: f64) -> f64 {
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
    ];
    let zi = 1.0 / z;
    let zi2 = zi * zi;
    let mut pw = zi;
    let mut s = 0.0;
    for c in C {
        s += c * pw;
        pw *= zi2;
    }
    s
}

/// ln[ a^{2h} Γ(a − h) / Γ(a + h) ] for a ± h > 0.
///
/// The a^{2h} factor cancels the leading growth of the ratio, so the result
/// stays O(h²/a) when a is large. Large a uses the Stirling difference with
/// log1p/atanh forms, which keeps full precision as a → ∞ (κ → 0 in the
/// Γ_κ and Mellin formulas).
pub fn ln_gamma_ratio_scaled(a: f64, h: f64) -> f64 {
    if !(a - h > 0.0 && a + h > 0.0) {
        return f64::NAN;
    }
    if h == 0.0 {
        return 0.0;
    }
    if a - h.abs() >= 15.0 {
        let q = h / a;
        // 2a·atanh(q) = 2h + 2a(atanh(q) − q); the 2h cancels exactly
        -2.0 * a * atanh_minus_id(q) + q.atanh() - h * (-q * q).ln_1p() - stirling_tail(a + h)
            + stirling_tail(a - h)
    } else {
        2.0 * h * a.ln() + ln_gamma(a - h) - ln_gamma(a + h)
    }
}

/// atanh(q) − q without cancellation for small q.
fn atanh_minus_id(q: f64) -> f64 {
    if q.abs() > 0.1 {
        return q.atanh() - q;
    }
    let q2 = q * q;
    let mut pw = q * q2;
    let mut s = 0.0_f64;
    let mut k = 3.0;
    while pw.abs() > 1e-18 * s.abs().max(f64::MIN_POSITIVE) {
        s += pw / k;
        pw *= q2;
        k += 2.0;
    }
    s
}

/// ln(sinh z / z) for z ≥ 0, without overflow.
pub(crate) fn ln_sinhc(z: f64) -> f64 {
    let z = z.abs();
    if z < 1e-4 {
        z * z / 6.0
    } else if z < 20.0 {
        (z.sinh() / z).ln()
    } else {
        z - (2.0 * z).ln() + (-(-2.0 * z).exp()).ln_1p()
    }
}

/// ln cosh z, without overflow.
pub(crate) fn ln_cosh(z: f64) -> f64 {
    let z = z.abs();
    z + (-2.0 * z).exp().ln_1p() - std::f64::consts::LN_2
}

/// Complex analogue of [`ln_gamma_ratio_scaled`]: ln[ z^{2h} Γ(z − h) / Γ(z + h) ]
/// up to a multiple of 2πi. Large |z| uses the asymptotic series in 1/z.
pub fn ln_gamma_ratio_scaled_complex(z: Complex64, h: f64) -> Complex64 {
    if z.norm() > 1e4 {
        let (h2, zi) = (h * h, z.inv());
        let c = [
            h,
            (2.0 * h2 + 1.0) * h / 6.0,
            h * h2 / 3.0,
            (2.0 * h2 * h2 + 10.0 / 3.0 * h2 - 1.0 / 3.0) * h / 20.0,
        ];
        let mut s = Complex64::new(0.0, 0.0);
        for c in c.iter().rev() {
            s = (s + *c) * zi;
        }
        s
    } else {
        2.0 * h * z.ln() + ln_gamma_complex(z - h) - ln_gamma_complex(z + h)
    }
}

/// Γ(s)Γ(r)/Γ(s + r) for s, r > 0.
pub fn beta(s: f64, r: f64) -> f64 {
    (ln_gamma(s) + ln_gamma(r) - ln_gamma(s + r)).exp()
}

/// ln Γ(z) for Re z ≥ 0.5 (principal branch of the Lanczos form), reflected otherwise.
pub fn ln_gamma_complex(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // ln Γ(z) = ln π − ln sin(πz) − ln Γ(1 − z)
        let s = (z * PI).sin();
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma_complex(1.0 - z);
    }
    let x = z - 1.0;
    let mut a = Complex64::new(LANCZOS[0], 0.0);
    let t = x + (LANCZOS_G + 0.5);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += *c / (x + i as f64);
    }
    LN_SQRT_2PI + (x + 0.5) * t.ln() - t + a.ln()
}

/// Bessel function of the first kind J_n(x) for integer n ≥ 0.
///
/// Ascending series for small |x|, Miller's backward recurrence in the middle
/// range and the Hankel asymptotic expansion once x ≫ n².
pub fn bessel_j(n: u32, x: f64) -> f64 {
    if x < 0.0 {
        let v = bessel_j(n, -x);
        return if n % 2 == 1 { -v } else { v };
    }
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let nf = n as f64;
    if x < 1.0 {
        return bessel_series(n, x);
    }
    if x > (30.0f64).max(2.0 * nf * nf) {
        return bessel_hankel(n, x);
    }
    bessel_miller(n, x)
}

fn bessel_series(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let q = -half * half;
    // (x/2)^n / n!
    let mut term = 1.0;
    for i in 1..=n {
        term *= half / i as f64;
    }
    let mut sum = term;
    let mut k = 1u32;
    loop {
        term *= q / (k as f64 * (k + n) as f64);
        sum += term;
        if term.abs() <= f64::EPSILON * sum.abs() || k > 200 {
            break;
        }
        k += 1;
    }
    sum
}

fn bessel_miller(n: u32, x: f64) -> f64 {
    let top = (n as f64).max(x);
    let mut m = (top + 20.0 + (40.0 * top).sqrt()) as u32;
    m += m % 2;
    let tox = 2.0 / x;
    let (mut jp, mut j) = (0.0f64, 1e-30f64);
    let mut norm = 0.0;
    let mut result = 0.0;
    for k in (1..=m).rev() {
        let jm = k as f64 * tox * j - jp;
        jp = j;
        j = jm;
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp *= 1e-250;
            result *= 1e-250;
            norm *= 1e-250;
        }
        // after this step j holds J_{k-1}
        if (k - 1) % 2 == 0 && k > 1 {
            norm += j;
        }
        if k - 1 == n {
            result = j;
        }
    }
    // J_0 + 2 Σ J_{2k} = 1
    let norm = 2.0 * norm + j;
    result / norm
}

fn bessel_hankel(n: u32, x: f64) -> f64 {
    let mu = 4.0 * (n as f64) * (n as f64);
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..60u32 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if term.abs() > last {
            break;
        }
        last = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    let phase = (0.5 * n as f64 + 0.25) * PI;
    let (sx, cx) = x.sin_cos();
    let (sp, cp) = phase.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}
