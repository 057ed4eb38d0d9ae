//! The OG10 Chern-number computation.
//!
//! Two sources of linear equations on the seven Chern numbers are combined:
//! comparing coefficients of the two expressions of `χ(X, L)` as a polynomial
//! in `y` (rank 3), and the four `χ^p` values (rank 4). Together they have
//! rank 7 and a unique solution.

mod linear;
mod og10;

pub use linear::{LinearSystem, Row};
pub use og10::{
    assemble_hodge_equations, assemble_rr_equations, chi_p_values, euler_characteristic_check,
    nieper_rhs, og10_chern_numbers, og10_spec, og10_unknowns, ortiz_lhs, published_chern_numbers,
    FormPoly, OG10_CHI_P, OG10_CHI_P_MISPRINT, PUBLISHED_CHERN_NUMBERS,
};
