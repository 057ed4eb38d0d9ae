//! Exact Riemann–Roch machinery for hyperkähler manifolds.
//!
//! Everything is computed over arbitrary-precision rationals:
//!
//! * [`algebra`]: rationals, dense univariate polynomials, truncated power
//!   series, Bernoulli numbers, Chebyshev polynomials and exact Gaussian
//!   elimination.
//! * [`chern`]: the truncated graded ring of formal Chern classes, with
//!   Newton identities, Chern character, Adams operations, exterior powers,
//!   the Todd class and formal integration.
//! * [`rr`]: the four known deformation families (K3^[n], Kum_n, OG6, OG10),
//!   their Riemann–Roch polynomials, Fujiki constants, the polarized Fujiki
//!   evaluator and the OG6/OG10 derivations.
//! * [`solver`]: the linear system whose unique solution is the seven Chern
//!   numbers of OG10.

pub mod algebra;
pub mod chern;
mod error;
pub mod rr;
pub mod solver;

pub use algebra::{Rational, TruncSeries, UniPoly};
pub use chern::{ChernNumbers, GradedClass, IntegralForm, Monomial, RingSpec};
pub use error::{Error, Result};
pub use rr::{BBGram, DivisorDatum, FamilyKind, HKFamily};
pub use solver::{LinearSystem, Row};


