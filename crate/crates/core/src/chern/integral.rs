use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::ring::{GradedClass, Monomial, RingSpec};
use super::symmetric::{adams, chern_character, exterior_power_ch, todd_class};
use crate::algebra::{format_rational, Rational};
use crate::error::{Error, Result};

/// Linear functional on top-weight monomials. Every top monomial of the
/// spec is a key, including those with coefficient zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralForm {
    spec: RingSpec,
    coeffs: BTreeMap<Monomial, Rational>,
}

impl IntegralForm {
    pub fn zero(spec: RingSpec) -> Self {
        IntegralForm {
            spec,
            coeffs: spec
                .top_monomials()
                .into_iter()
                .map(|m| (m, Rational::zero()))
                .collect(),
        }
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn coeffs(&self) -> &BTreeMap<Monomial, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.coeffs.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(Zero::is_zero)
    }

    /// Coefficients in the given monomial order.
    pub fn vector(&self, order: &[Monomial]) -> Vec<Rational> {
        order.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn try_add(&self, other: &IntegralForm) -> Result<IntegralForm> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            *out.coeffs.get_mut(m).unwrap() += c;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> IntegralForm {
        IntegralForm {
            spec: self.spec,
            coeffs: self.coeffs.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }
}

impl fmt::Display for IntegralForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| format!("{}*{}", format_rational(c), m))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Values of all top-weight Chern monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernNumbers {
    spec: RingSpec,
    values: BTreeMap<Monomial, Rational>,
}

impl ChernNumbers {
    /// Fails unless `values` assigns exactly the top monomials of `spec`.
    pub fn new(
        spec: RingSpec,
        values: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let values: BTreeMap<_, _> = values.into_iter().collect();
        let tops = spec.top_monomials();
        if values.len() != tops.len() || tops.iter().any(|m| !values.contains_key(m)) {
            return Err(Error::InvalidSpec(
                "Chern numbers must assign every top-weight monomial exactly once".into(),
            ));
        }
        Ok(ChernNumbers { spec, values })
    }

    pub fn zero(spec: RingSpec) -> Self {
        let values = spec
            .top_monomials()
            .into_iter()
            .map(|m| (m, Rational::zero()))
            .collect();
        ChernNumbers { spec, values }
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn get(&self, m: &Monomial) -> Option<&Rational> {
        self.values.get(m)
    }

    pub fn values(&self) -> &BTreeMap<Monomial, Rational> {
        &self.values
    }
}

/// `∫`: the weight-`dim` component of `a` as a functional.
pub fn integrate(a: &GradedClass) -> IntegralForm {
    let mut form = IntegralForm::zero(a.spec());
    for (m, c) in a.component(a.spec().dim()).terms() {
        *form.coeffs.get_mut(m).expect("top monomial") = c.clone();
    }
    form
}

/// Pairs a functional with an assignment of Chern numbers.
pub fn evaluate(form: &IntegralForm, nums: &ChernNumbers) -> Result<Rational> {
    if form.spec != nums.spec {
        return Err(Error::SpecMismatch);
    }
    Ok(form
        .coeffs
        .iter()
        .map(|(m, c)| c * &nums.values[m])
        .sum())
}

/// `χ^p = ∫ ch(Λ^p Ω) · td` as a functional on Chern numbers. The cotangent
/// character is `ψ^{−1}` of the tangent one.
pub fn chi_p_form(spec: RingSpec, p: usize) -> Result<IntegralForm> {
    let rank = spec.dim();
    let ch_omega = adams(&chern_character(spec, rank), -1);
    let lambda = exterior_power_ch(&ch_omega, rank, p)?;
    Ok(integrate(&(&lambda * &todd_class(spec))))
}
