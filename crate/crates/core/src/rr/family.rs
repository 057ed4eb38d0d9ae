use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{binom_poly, factorial, int, rat, Rational, UniPoly};
use crate::chern::RingSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Hilbert schemes of `n` points on a K3 surface.
    K3n,
    /// Generalized Kummer varieties.
    Kumn,
    /// O'Grady's six-dimensional example.
    OG6,
    /// O'Grady's ten-dimensional example.
    OG10,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "k3n" | "k3" => Ok(FamilyKind::K3n),
            "kumn" | "kum" => Ok(FamilyKind::Kumn),
            "og6" => Ok(FamilyKind::OG6),
            "og10" => Ok(FamilyKind::OG10),
            _ => Err(Error::InvalidFamily(format!("unknown family {s:?}"))),
        }
    }
}

/// A deformation type together with half its complex dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HKFamily {
    kind: FamilyKind,
    n: usize,
}

impl HKFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        let ok = match kind {
            FamilyKind::K3n | FamilyKind::Kumn => n >= 1,
            FamilyKind::OG6 => n == 3,
            FamilyKind::OG10 => n == 5,
        };
        if !ok {
            return Err(Error::InvalidFamily(format!("{kind:?} with n = {n}")));
        }
        Ok(HKFamily { kind, n })
    }

    /// Like [`HKFamily::new`], but OG6/OG10 take their fixed `n` when none is
    /// given.
    pub fn with_default_n(kind: FamilyKind, n: Option<usize>) -> Result<Self> {
        let n = match (kind, n) {
            (_, Some(n)) => n,
            (FamilyKind::OG6, None) => 3,
            (FamilyKind::OG10, None) => 5,
            (_, None) => {
                return Err(Error::InvalidFamily(format!("{kind:?} needs an explicit n")))
            }
        };
        HKFamily::new(kind, n)
    }

    pub fn k3n(n: usize) -> Result<Self> {
        HKFamily::new(FamilyKind::K3n, n)
    }

    pub fn kumn(n: usize) -> Result<Self> {
        HKFamily::new(FamilyKind::Kumn, n)
    }

    pub fn og6() -> Self {
        HKFamily { kind: FamilyKind::OG6, n: 3 }
    }

    pub fn og10() -> Self {
        HKFamily { kind: FamilyKind::OG10, n: 5 }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn ring_spec(&self) -> RingSpec {
        RingSpec::hyperkahler(self.n)
    }

    /// `RR(t)` with `χ(X, L) = RR(q_X(L))`.
    ///
    /// K3^[n]: `binom(t/2 + n + 1, n)`; Kum_n: `(n+1)·binom(t/2 + n, n)`.
    /// OG10 is of K3^[5] type and OG6 of Kum_3 type.
    pub fn rr_polynomial(&self) -> UniPoly {
        let n = self.n;
        let half = rat(1, 2);
        match self.kind {
            FamilyKind::K3n | FamilyKind::OG10 => binom_poly(&half, &int(n as i64 + 1), n),
            FamilyKind::Kumn | FamilyKind::OG6 => {
                binom_poly(&half, &int(n as i64), n).scale(&int(n as i64 + 1))
            }
        }
    }

    /// `c_X = (2n)! · [t^n] RR(t)`.
    pub fn fujiki_constant(&self) -> Rational {
        factorial(self.dim() as u64) * self.rr_polynomial().coeff(self.n)
    }

    /// `a_0, …, a_n` with `a_i = (2i)! · [t^i] RR(t)`, so that
    /// `χ(X, L) = Σ a_i / (2i)! · q_X(L)^i`.
    pub fn huybrechts_constants(&self) -> Vec<Rational> {
        let rr = self.rr_polynomial();
        (0..=self.n)
            .map(|i| factorial(2 * i as u64) * rr.coeff(i))
            .collect()
    }

    pub fn chi_line_bundle(&self, q: &Rational) -> Rational {
        self.rr_polynomial().eval(q)
    }

    /// `M = λ(L) / q_X(L) = 2n·a / b` where `a`, `b` are the coefficients
    /// of `t^n` and `t^{n−1}` in `RR(t)`.
    pub fn lambda_q_ratio(&self) -> Result<Rational> {
        let rr = self.rr_polynomial();
        let b = rr.coeff(self.n - 1);
        if b.is_zero() {
            return Err(Error::VanishingCoefficient(self.n - 1));
        }
        Ok(int(2 * self.n as i64) * rr.coeff(self.n) / b)
    }

    /// RR polynomial in Nieper's characteristic value: `RR_λ(s) = RR(s / M)`,
    /// so that `RR(t) = RR_λ(M·t)`.
    pub fn rr_in_lambda(&self) -> Result<UniPoly> {
        let m = self.lambda_q_ratio()?;
        let inner = UniPoly::linear(int(1) / m, int(0));
        Ok(self.rr_polynomial().compose(&inner))
    }

    /// `C(c_2(X)) = 12·(2n−2)!·b`, the constant with
    /// `∫ c_2(X) α^{2n−2} = C(c_2) q_X(α)^{n−1}`.
    pub fn c2_fujiki_constant(&self) -> Rational {
        int(12) * factorial(self.dim() as u64 - 2) * self.rr_polynomial().coeff(self.n - 1)
    }
}

impl fmt::Display for HKFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::K3n => write!(f, "K3^[{}]", self.n),
            FamilyKind::Kumn => write!(f, "Kum_{}", self.n),
            FamilyKind::OG6 => write!(f, "OG6"),
            FamilyKind::OG10 => write!(f, "OG10"),
        }
    }
}
