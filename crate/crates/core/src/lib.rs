//! κ-deformed numerics: the κ-algebra, exp_κ/ln_κ, the Γ_κ and Mellin family,
//! the κ-Laplace transform, κ-trigonometry and κ-entropy.

pub mod algebra;
pub mod calculus;
pub mod error;
pub mod functions;
pub mod gamma;
pub mod laplace;
pub mod param;
pub mod quadrature;
pub mod special;
pub mod stat;
pub mod trig;
pub mod verify;

pub use algebra::{
    deform_inv, deform_map, kappa_diff, kappa_div, kappa_inverse, kappa_nfold_sum, kappa_prod,
    kappa_sum, kappa_unit,
};
pub use error::{KappaError, Result};
pub use param::{DeformKind, KappaParam};
pub use quadrature::{QuadratureResult, QuadratureSpec, TailStrategy};
pub use functions::{
    deformation_constants, exp_kappa, exp_kappa_checked, exp_kappa_product_expansion,
    exp_kappa_taylor, kappa_factorial, ln_kappa, ln_kappa_series_coefficient, ln_kappa_taylor,
    product_expansion_coefficient, xi_poly, DeformationConstants, SeriesValue, XiPolynomialTable,
};
pub use gamma::{
    gamma_kappa, gamma_kappa_incomplete, gamma_kappa_mellin_integral, incomplete_beta,
    incomplete_beta_upper, ln_kappa_gamma_integral, ln_kappa_gamma_ratio, ln_kappa_power_integral,
    mellin_kappa, mellin_kappa_incomplete, mellin_kappa_incomplete_closed,
    mellin_kappa_incomplete_quadrature, GammaTail,
};
pub use calculus::{
    kappa_derivative, kappa_derivative_with, kappa_integral, kinetic_energy, lorentz_factor, Measure,
};
pub use laplace::{
    bessel_kernel_check, final_value, initial_value, inverse_laplace_kappa, kappa_convolution,
    laplace_kappa, laplace_kappa_from, laplace_property_check, laplace_table,
    laplace_table_complex, limit_value_theorems, power_row_forms, BesselCheck, GrowthBound,
    LaplaceProperty, PropertyCheck, PropertyInput, TableEntry,
};
pub use stat::{
    kappa_entropy, kappa_entropy_discrete, kappa_statistical_weight, maxent_distribution,
    stationarity_residual, tail_exponent_fit, DiscreteDistribution, StatParams,
};
pub use trig::{de_moivre_kappa, inverse_trig_kappa, trig_kappa, TrigFunction, TrigSelector};
pub use verify::{run_suite, CheckReport, Suite, ToleranceProfile};
