//! The OG10 and OG6 derivations: recover the Riemann–Roch polynomial from a
//! small amount of geometric input.

use crate::algebra::linalg::{self, SolveFailure};
use crate::algebra::{binom_poly, factorial, int, rat, Rational, UniPoly};
use crate::error::{Error, Result};

use super::family::HKFamily;

/// `binom(s + 5, 5) − 6` in the unknown `s = (k − q_J(Θ))/2`.
///
/// On the OG10 model with a Lagrangian fibration,
/// `RR(t) = binom(t/2 + s + 5, 5)`; its constant term must be `χ(O) = 6`.
pub fn og10_shift_equation() -> UniPoly {
    &binom_poly(&int(1), &int(5), 5) - &UniPoly::constant(int(6))
}

/// The unique rational root of [`og10_shift_equation`].
pub fn solve_og10_shift() -> Result<Rational> {
    let roots = og10_shift_equation().rational_roots();
    match roots.as_slice() {
        [root] => Ok(root.clone()),
        _ => Err(Error::RootCount(roots.len())),
    }
}

/// `binom(t/2 + shift + 5, 5)`.
pub fn og10_polynomial_from_shift(shift: &Rational) -> UniPoly {
    binom_poly(&rat(1, 2), &(shift + int(5)), 5)
}

/// `h^0(J, Θ + mF)` for `m ≫ 0`.
///
/// Since `q(Θ + mF) = q(Θ) + 2m`, this is `RR(q(Θ) + 2m)`, i.e.
/// `binom(m + q(Θ)/2 + shift + 5, 5)` with the solved shift.
pub fn h0_theta_fiber(m: i64, q_theta: &Rational) -> Result<Rational> {
    let shift = solve_og10_shift()?;
    let top = q_theta / int(2) + shift + int(5);
    Ok(binom_poly(&int(1), &top, 5).eval(&int(m)))
}

/// A divisor with known Euler characteristic and Beauville–Bogomolov square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorDatum {
    pub name: String,
    /// `χ(X, O(D))`
    pub chi: Rational,
    /// `q_X(D)`
    pub q: Rational,
}

impl DivisorDatum {
    pub fn new(name: impl Into<String>, chi: Rational, q: Rational) -> Self {
        DivisorDatum {
            name: name.into(),
            chi,
            q,
        }
    }
}

/// The two OG6 divisors: the exceptional divisor `Σ̃` and `B̃`.
pub fn og6_table() -> Vec<DivisorDatum> {
    vec![
        DivisorDatum::new("Sigma~", int(-4), int(-8)),
        DivisorDatum::new("B~", int(0), int(-2)),
    ]
}

/// `χ(X, O(E)) = χ(O_X) + χ(E, ω_E)` for an effective divisor `E` on a
/// `2n`-dimensional HK manifold, using `χ(O_X) = n + 1`.
pub fn chi_of_divisor_bundle(n: usize, chi_omega_e: &Rational) -> Rational {
    int(n as i64 + 1) + chi_omega_e
}

/// `χ(E, ω_E) = −χ(E, O_E)` for smooth odd-dimensional `E` (Serre duality).
pub fn chi_omega_of_smooth_divisor(chi_o_e: &Rational) -> Rational {
    -chi_o_e
}

/// Solves `χ(L) = a_0 + a_1/2!·q + a_2/4!·q² + a_3/6!·q³` for `(a_1, a_2)`
/// from divisors with distinct `q`, with `a_0 = 4` and `a_3 = c_X = 60`.
///
/// Also checks that the result is the Kum_3 polynomial.
pub fn solve_og6_coefficients(divisors: &[DivisorDatum]) -> Result<(Rational, Rational)> {
    if divisors.len() < 2 {
        return Err(Error::TooFewDivisors(2));
    }
    let a0 = int(4);
    let a3 = int(60);
    let (f2, f4, f6) = (factorial(2), factorial(4), factorial(6));
    let rows: Vec<Vec<Rational>> = divisors
        .iter()
        .map(|d| vec![&d.q / &f2, &d.q * &d.q / &f4])
        .collect();
    let rhs: Vec<Rational> = divisors
        .iter()
        .map(|d| &d.chi - &a0 - &a3 * num_traits::pow(d.q.clone(), 3) / &f6)
        .collect();
    let sol = linalg::solve(&rows, &rhs).map_err(|e| match e {
        SolveFailure::RankDeficient { rank } => Error::RankDeficient { rank, unknowns: 2 },
        SolveFailure::Inconsistent { row } => Error::Inconsistent(divisors[row].name.clone()),
    })?;
    let (a1, a2) = (sol[0].clone(), sol[1].clone());
    let poly = UniPoly::new(vec![a0, &a1 / &f2, &a2 / &f4, a3 / f6]);
    if poly != HKFamily::kumn(3)?.rr_polynomial() {
        return Err(Error::Inconsistent("OG6 polynomial is not of Kum_3 type".into()));
    }
    Ok((a1, a2))
}
