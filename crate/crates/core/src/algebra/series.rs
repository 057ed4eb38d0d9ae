use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Power series `Σ_{i=0}^{N} a_i x^i` known modulo `x^{N+1}`.
///
/// The truncation order `N` is carried by each value. Binary operations
/// require equal orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        TruncSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::new(vec![int(1)], order)
    }

    /// `e^x`.
    pub fn exp_x(order: usize) -> Self {
        TruncSeries::from_fn(order, |i| Rational::new(BigInt::one(), factorial_int(i)))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Formal derivative; the top coefficient becomes unknown and is set to 0.
    fn derivative(&self) -> Vec<Rational> {
        (1..self.coeffs.len())
            .map(|i| &self.coeffs[i] * int(i as i64))
            .collect()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    fn require_constant(&self, expected: i64) -> Result<()> {
        if self.coeffs[0] != int(expected) {
            return Err(Error::ConstantTerm {
                expected,
                found: Box::new(self.coeffs[0].clone()),
            });
        }
        Ok(())
    }

    /// Multiplicative inverse; needs constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        self.require_constant(1)?;
        let n = self.order();
        let mut inv = vec![Rational::zero(); n + 1];
        inv[0] = int(1);
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc -= &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = acc;
        }
        Ok(TruncSeries { coeffs: inv })
    }

    /// `log(s)`; needs constant term 1. Integrates `s'/s`.
    pub fn log(&self) -> Result<Self> {
        let inv = self.inverse()?;
        let n = self.order();
        let d = TruncSeries::new(self.derivative(), n);
        let q = d.try_mul(&inv)?;
        let mut out = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            out[k] = q.coeff(k - 1) / int(k as i64);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `exp(s)`; needs constant term 0. Solves `e' = s'·e` term by term.
    pub fn exp(&self) -> Result<Self> {
        self.require_constant(0)?;
        let n = self.order();
        let ds = self.derivative();
        let mut e = vec![Rational::zero(); n + 1];
        e[0] = int(1);
        for k in 1..=n {
            // k·e_k = Σ_{j=1}^{k} j·s_j·e_{k−j}
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &ds[j - 1] * &e[k - j];
            }
            e[k] = acc / int(k as i64);
        }
        Ok(TruncSeries { coeffs: e })
    }
}

fn factorial_int(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    /// Panics on mismatched orders; see [`TruncSeries::try_add`].
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.try_add(rhs).expect("truncation order mismatch")
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    /// Panics on mismatched orders; see [`TruncSeries::try_mul`].
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.try_mul(rhs).expect("truncation order mismatch")
    }
}
