use num_traits::Zero;

use super::linear::LinearSystem;
use crate::algebra::{
    binom_poly, chebyshev_t, int, modified_bernoulli, Rational, UniPoly,
};
use crate::chern::{
    chern_to_powersums, chi_p_form, evaluate, integrate, ChernNumbers, GradedClass, IntegralForm,
    Monomial, RingSpec,
};
use crate::error::Result;

/// Values of `χ^p(X) = Σ_q (−1)^q h^{p,q}(X)` for OG10, `p = 0..=4`.
///
/// The entry for `p = 3` is `−7173`. The value `−7151` is also quoted for it
/// ([`OG10_CHI_P_MISPRINT`]), but with that value the combined system has a
/// unique non-integral solution (`c_10 = 883464/5`), so it cannot be the
/// true invariant; `−7173` is what the integral solution reproduces.
pub const OG10_CHI_P: [i64; 5] = [6, -111, 1062, -7173, 33534];

/// The quoted `χ^3 = −7151`; see [`OG10_CHI_P`].
pub const OG10_CHI_P_MISPRINT: i64 = -7151;

/// Published Chern numbers of OG10, in the order of [`og10_unknowns`].
pub const PUBLISHED_CHERN_NUMBERS: [i64; 7] = [
    127_370_880,
    53_071_200,
    12_383_280,
    1_791_720,
    22_113_000,
    5_159_700,
    176_904,
];

pub fn og10_spec() -> RingSpec {
    RingSpec::hyperkahler(5)
}

/// `c2^5, c2^3*c4, c2^2*c6, c2*c8, c2*c4^2, c4*c6, c10`.
pub fn og10_unknowns() -> Vec<Monomial> {
    ["c2^5", "c2^3*c4", "c2^2*c6", "c2*c8", "c2*c4^2", "c4*c6", "c10"]
        .iter()
        .map(|s| s.parse().expect("valid monomial"))
        .collect()
}

pub fn published_chern_numbers() -> ChernNumbers {
    ChernNumbers::new(
        og10_spec(),
        og10_unknowns()
            .into_iter()
            .zip(PUBLISHED_CHERN_NUMBERS.iter().map(|&v| int(v))),
    )
    .expect("complete")
}

/// Polynomial in `y` with Chern-class coefficients; index = power of `y`.
#[derive(Debug, Clone)]
struct ClassPoly(Vec<GradedClass>);

impl ClassPoly {
    fn mul(&self, other: &ClassPoly, spec: RingSpec) -> ClassPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return ClassPoly(Vec::new());
        }
        let mut out = vec![GradedClass::zero(spec); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ClassPoly(out)
    }

    fn scale(&self, c: &Rational) -> ClassPoly {
        ClassPoly(self.0.iter().map(|g| g.scale(c)).collect())
    }

    fn add(&self, other: &ClassPoly, spec: RingSpec) -> ClassPoly {
        let len = self.0.len().max(other.0.len());
        let zero = GradedClass::zero(spec);
        ClassPoly(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) + other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(GradedClass::is_zero)
    }

    /// `Σ_m E^m / m!` for `E` without weight-0 part; finite because `E^m`
    /// vanishes once `2m` exceeds the dimension.
    fn exp(&self, spec: RingSpec) -> ClassPoly {
        let mut sum = ClassPoly(vec![GradedClass::one(spec)]);
        let mut term = sum.clone();
        for m in 1..=spec.dim() {
            term = term.mul(self, spec).scale(&(int(1) / int(m as i64)));
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term, spec);
        }
        sum
    }
}

/// Polynomial in `y` whose coefficients are functionals on Chern numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormPoly {
    coeffs: Vec<IntegralForm>,
}

impl FormPoly {
    /// Coefficient of `y^d` (the zero functional past the end).
    pub fn coeff(&self, d: usize) -> IntegralForm {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| IntegralForm::zero(og10_spec()))
    }

    pub fn coeffs(&self) -> &[IntegralForm] {
        &self.coeffs
    }

    /// Highest power of `y` with a nonzero functional.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|f| !f.is_zero())
    }

    /// Pairs every coefficient with the given Chern numbers.
    pub fn evaluate(&self, nums: &ChernNumbers) -> Result<UniPoly> {
        Ok(UniPoly::new(
            self.coeffs
                .iter()
                .map(|f| evaluate(f, nums))
                .collect::<Result<_>>()?,
        ))
    }
}

/// `∫ exp(−2 Σ_{k=1}^{5} b_{2k} s_{2k}(X) T_{2k}(y))` on a ten-dimensional
/// HK manifold, as a polynomial in `y` with functional coefficients.
///
/// `s_{2k} = (2k)!·ch_{2k}` is the power sum `p_{2k}` of the Chern roots and
/// `b_{2k} = B_{2k} / (4k·(2k)!)`. Terms with `2k > 10` vanish.
pub fn nieper_rhs() -> FormPoly {
    let spec = og10_spec();
    let p = chern_to_powersums(spec);
    let mut exponent = ClassPoly(Vec::new());
    for k in 1..=spec.dim() / 2 {
        let s_2k = &p[2 * k - 1];
        let c = int(-2) * modified_bernoulli(2 * k);
        let t = chebyshev_t(2 * k);
        let term = ClassPoly(
            t.coeffs()
                .iter()
                .map(|a| s_2k.scale(&(&c * a)))
                .collect(),
        );
        exponent = exponent.add(&term, spec);
    }
    let e = exponent.exp(spec);
    FormPoly {
        coeffs: e.0.iter().map(integrate).collect(),
    }
}

/// `binom(8y² − 2, 5)`: the RR polynomial `binom(2λ + 6, 5)` under
/// `y² = λ/4 + 1`.
pub fn ortiz_lhs() -> UniPoly {
    let inner = UniPoly::new(vec![int(-2), int(0), int(8)]);
    binom_poly(&int(1), &int(0), 5).compose(&inner)
}

/// One row per even power `y^0, …, y^10`: the functional coefficient of
/// [`nieper_rhs`] equals the coefficient of [`ortiz_lhs`].
pub fn assemble_rr_equations() -> Result<LinearSystem> {
    let rhs = nieper_rhs();
    let lhs = ortiz_lhs();
    let mut sys = LinearSystem::new(og10_spec(), og10_unknowns())?;
    for d in (0..=10).step_by(2) {
        sys.push_form(&rhs.coeff(d), lhs.coeff(d), format!("y^{d} coefficient"))?;
    }
    Ok(sys)
}

/// Rows `∫ ch(Λ^p Ω) td = χ^p` for `p = 1..=4`, plus `p = 0` when asked.
pub fn assemble_hodge_equations(include_chi0: bool) -> Result<LinearSystem> {
    let spec = og10_spec();
    let mut sys = LinearSystem::new(spec, og10_unknowns())?;
    let start = if include_chi0 { 0 } else { 1 };
    for p in start..=4 {
        sys.push_form(&chi_p_form(spec, p)?, int(OG10_CHI_P[p]), format!("chi^{p}"))?;
    }
    Ok(sys)
}

/// Solves the RR rows together with the `χ^1..χ^4` rows.
pub fn og10_chern_numbers() -> Result<ChernNumbers> {
    assemble_rr_equations()?
        .combine(&assemble_hodge_equations(false)?)?
        .solve()
}

/// `χ^0, …, χ^{10}` at the given Chern numbers.
pub fn chi_p_values(nums: &ChernNumbers) -> Result<Vec<Rational>> {
    let spec = nums.spec();
    (0..=spec.dim())
        .map(|p| evaluate(&chi_p_form(spec, p)?, nums))
        .collect()
}

/// `Σ_p (−1)^p χ^p`, which should equal the top Chern number `∫ c_{2n}`.
pub fn euler_characteristic_check(nums: &ChernNumbers) -> Result<Rational> {
    Ok(chi_p_values(nums)?
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (p, v)| {
            if p % 2 == 0 {
                acc + v
            } else {
                acc - v
            }
        }))
}
