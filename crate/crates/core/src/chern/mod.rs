//! The truncated graded ring of formal Chern classes.
//!
//! A class lives in `Q[c_1, …, c_{2n}]` with `c_j` of weight `j` (complex
//! degree), truncated above weight `2n`. In hyperkähler mode the odd
//! generators do not exist at all, so the ring is `Q[c_2, c_4, …, c_{2n}]`.

mod integral;
mod ring;
mod symmetric;

pub use integral::{chi_p_form, evaluate, integrate, ChernNumbers, IntegralForm};
pub use ring::{GradedClass, Monomial, RingSpec};
pub use symmetric::{
    adams, chern_character, chern_to_powersums, exterior_power_ch, powersums_to_chern,
    todd_class,
};
