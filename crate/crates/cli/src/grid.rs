use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

/// Evaluation points plus the κ values to sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
    pub kappas: Vec<f64>,
    pub scale: Scale,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, points: usize, kappas: Vec<f64>, scale: Scale) -> Result<Self, String> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return Err(format!("grid bounds must be finite, got [{x_min}, {x_max}]"));
        }
        if !(x_min < x_max) {
            return Err(format!("need xmin < xmax, got {x_min} >= {x_max}"));
        }
        if points < 2 {
            return Err(format!("need at least 2 points, got {points}"));
        }
        if kappas.is_empty() {
            return Err("need at least one kappa".into());
        }
        if let Some(k) = kappas.iter().find(|k| !k.is_finite()) {
            return Err(format!("kappa must be finite, got {k}"));
        }
        if scale == Scale::Log && x_min <= 0.0 {
            return Err(format!("log scale needs xmin > 0, got {x_min}"));
        }
        Ok(GridSpec {
            x_min,
            x_max,
            points,
            kappas,
            scale,
        })
    }

    /// The x values; the last one is exactly x_max.
    pub fn xs(&self) -> Vec<f64> {
        let n = self.points - 1;
        (0..=n)
            .map(|i| {
                if i == n {
                    return self.x_max;
                }
                let f = i as f64 / n as f64;
                match self.scale {
                    Scale::Linear => self.x_min + (self.x_max - self.x_min) * i as f64 / n as f64,
                    Scale::Log => self.x_min * (self.x_max / self.x_min).powf(f),
                }
            })
            .collect()
    }
}

/// 15 significant digits, shortest form: `1`, `1.5`, `2.61803398874989`,
/// `1.23e-7`. Non-finite values print as `nan`, `inf`, `-inf`.
pub fn fmt_num(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let r: f64 = format!("{v:.14e}").parse().expect("formatted float parses");
    let a = r.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// One CSV row.
pub fn csv_row(out: &mut String, x: f64, kappa: f64, value: f64) {
    let _ = writeln!(out, "{},{},{}", fmt_num(x), fmt_num(kappa), fmt_num(value));
}
