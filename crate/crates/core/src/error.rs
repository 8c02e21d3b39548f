use thiserror::Error;

/// Errors reported by the κ-deformed numerics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KappaError {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("{what}: argument {value} outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: String,
    },

    #[error("{what} overflows (composed argument {argument})")]
    Overflow { what: &'static str, argument: f64 },

    /// ξ_n(κ) vanishes because κ = 1/m for a factor (1 − m²κ²).
    #[error("κ-factorial of order {n} has a pole at κ = 1/{m}")]
    FactorialPole { n: u32, m: u32 },

    #[error("{what} has a pole at {at}")]
    Pole { what: &'static str, at: f64 },

    #[error("series for {what} does not converge at {value}")]
    ConvergenceDomain { what: &'static str, value: f64 },

    #[error("quadrature for {what} did not converge (error estimate {residual:e})")]
    Quadrature { what: &'static str, residual: f64 },

    #[error("convergence guard violated: s = {s} must exceed |κ|·ν = {bound}")]
    Guard { s: f64, bound: f64 },

    #[error("limit could not be determined: {0}")]
    LimitUndetermined(String),

    #[error("tail fit failed: {0}")]
    Fit(String),

    #[error("precondition not met: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, KappaError>;

pub(crate) fn check_finite(what: &str, x: f64) -> Result<()> {
    if x.is_nan() {
        Err(KappaError::Input(format!("{what} is NaN")))
    } else if x.is_infinite() {
        Err(KappaError::Input(format!("{what} is infinite")))
    } else {
        Ok(())
    }
}
