//! Functions `eval` can put on a grid.

use kappa_core::{
    deform_inv, deform_map, exp_kappa_checked, gamma_kappa, inverse_trig_kappa, kinetic_energy,
    ln_kappa, ln_kappa_gamma_ratio, lorentz_factor, mellin_kappa, trig_kappa, DeformKind, KappaParam,
    Result, TrigSelector,
};

type Eval = fn(f64, KappaParam) -> Result<f64>;

pub struct Entry {
    pub name: &'static str,
    pub about: &'static str,
    pub eval: Eval,
}

macro_rules! trig {
    ($sel:expr) => {
        |x, k| trig_kappa(x, k, $sel)
    };
}

macro_rules! arc {
    ($sel:expr) => {
        |x, k| inverse_trig_kappa(x, k, $sel)
    };
}

pub const REGISTRY: &[Entry] = &[
    Entry { name: "exp_kappa", about: "exp({x}) with {x} = arcsinh(kx)/k", eval: exp_kappa_checked },
    Entry { name: "ln_kappa", about: "(x^k - x^-k)/(2k), x > 0", eval: ln_kappa },
    Entry { name: "gamma_kappa", about: "deformed Gamma function", eval: gamma_kappa },
    Entry { name: "ln_gamma_kappa", about: "ln of the deformed Gamma function, x > 0", eval: ln_kappa_gamma_ratio },
    Entry { name: "mellin_kappa", about: "integral of t^(x-1) exp_kappa(-t), 0 < x < 1/k", eval: mellin_kappa },
    Entry { name: "brace", about: "{x} = arcsinh(kx)/k", eval: |x, k| deform_map(x, k, DeformKind::Hyperbolic) },
    Entry { name: "bracket", about: "[x] = sinh(kx)/k", eval: |x, k| deform_inv(x, k, DeformKind::Hyperbolic) },
    Entry { name: "brace_cyclic", about: "arcsin(kx)/k, |x| <= 1/k", eval: |x, k| deform_map(x, k, DeformKind::Cyclic) },
    Entry { name: "bracket_cyclic", about: "sin(kx)/k", eval: |x, k| deform_inv(x, k, DeformKind::Cyclic) },
    Entry { name: "lorentz_factor", about: "sqrt(1 + k^2 x^2)", eval: |x, k| Ok(lorentz_factor(x, k)) },
    Entry { name: "kinetic_energy", about: "(sqrt(1 + k^2 x^2) - 1)/k^2", eval: |x, k| Ok(kinetic_energy(x, k)) },
    Entry { name: "sinh_kappa", about: "sinh({x})", eval: trig!(TrigSelector::SINH) },
    Entry { name: "cosh_kappa", about: "cosh({x})", eval: trig!(TrigSelector::COSH) },
    Entry { name: "tanh_kappa", about: "tanh({x})", eval: trig!(TrigSelector::TANH) },
    Entry { name: "coth_kappa", about: "coth({x})", eval: trig!(TrigSelector::COTH) },
    Entry { name: "sin_kappa", about: "sin of the cyclic angle", eval: trig!(TrigSelector::SIN) },
    Entry { name: "cos_kappa", about: "cos of the cyclic angle", eval: trig!(TrigSelector::COS) },
    Entry { name: "tan_kappa", about: "tan of the cyclic angle", eval: trig!(TrigSelector::TAN) },
    Entry { name: "cot_kappa", about: "cot of the cyclic angle", eval: trig!(TrigSelector::COT) },
    Entry { name: "arcsinh_kappa", about: "inverse of sinh_kappa", eval: arc!(TrigSelector::SINH) },
    Entry { name: "arccosh_kappa", about: "inverse of cosh_kappa, x >= 1", eval: arc!(TrigSelector::COSH) },
    Entry { name: "arctanh_kappa", about: "inverse of tanh_kappa, |x| < 1", eval: arc!(TrigSelector::TANH) },
    Entry { name: "arccoth_kappa", about: "inverse of coth_kappa, |x| > 1", eval: arc!(TrigSelector::COTH) },
    Entry { name: "arcsin_kappa", about: "inverse of sin_kappa, |x| <= 1", eval: arc!(TrigSelector::SIN) },
    Entry { name: "arccos_kappa", about: "inverse of cos_kappa, |x| <= 1", eval: arc!(TrigSelector::COS) },
    Entry { name: "arctan_kappa", about: "inverse of tan_kappa", eval: arc!(TrigSelector::TAN) },
    Entry { name: "arccot_kappa", about: "inverse of cot_kappa", eval: arc!(TrigSelector::COT) },
];

pub fn lookup(name: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.name).collect()
}
