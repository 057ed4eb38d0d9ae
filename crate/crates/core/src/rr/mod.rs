//! Deformation families of hyperkähler manifolds and their Riemann–Roch
//! polynomials.

mod derivations;
mod family;
mod fujiki;

pub use derivations::{
    chi_of_divisor_bundle, chi_omega_of_smooth_divisor, h0_theta_fiber, og10_shift_equation,
    og10_polynomial_from_shift, og6_table, solve_og10_shift, solve_og6_coefficients, DivisorDatum,
};
pub use family::{FamilyKind, HKFamily};
pub use fujiki::{count_perfect_matchings, fujiki_polarized, BBGram};
