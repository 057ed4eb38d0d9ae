//! Exact scalar, polynomial and power-series arithmetic.

pub mod linalg;
mod poly;
mod rational;
mod sequences;
mod series;

pub use poly::{binom_poly, UniPoly};
pub use rational::{factorial, format_rational, int, parse_rational, rat, Rational};
pub use sequences::{bernoulli, chebyshev_t, modified_bernoulli, todd_log_coefficients};
pub use series::TruncSeries;
