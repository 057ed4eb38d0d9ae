//! Symmetric-function operations: Newton identities, Chern character, Adams
//! operations, exterior powers and the Todd class.

use num_traits::Zero;

use super::ring::{GradedClass, RingSpec};
use crate::algebra::{factorial, int, todd_log_coefficients, Rational};
use crate::error::{Error, Result};

fn sign(i: usize) -> Rational {
    if i.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// Power sums `p_1, …, p_dim` of the Chern roots in the `c`-basis; entry
/// `k − 1` holds `p_k`.
///
/// Newton: `p_k = Σ_{i=1}^{k−1} (−1)^{i−1} c_i p_{k−i} + (−1)^{k−1} k c_k`.
pub fn chern_to_powersums(spec: RingSpec) -> Vec<GradedClass> {
    let mut p: Vec<GradedClass> = Vec::with_capacity(spec.dim());
    for k in 1..=spec.dim() {
        let mut acc = GradedClass::chern(spec, k).scale(&(sign(k - 1) * int(k as i64)));
        for i in 1..k {
            let term = &GradedClass::chern(spec, i) * &p[k - i - 1];
            acc = &acc + &term.scale(&sign(i - 1));
        }
        p.push(acc);
    }
    p
}

/// Inverse Newton recursion: given classes `p_1, …, p_dim` (entry `k − 1`
/// holds `p_k`), returns `c_1, …, c_dim` from
/// `k·c_k = Σ_{i=1}^{k} (−1)^{i−1} c_{k−i} p_i`.
///
/// Passing the ring generators themselves yields the inverse expressions:
/// `c_k` as a polynomial in the symbols `p_j`.
pub fn powersums_to_chern(spec: RingSpec, powersums: &[GradedClass]) -> Result<Vec<GradedClass>> {
    if powersums.len() != spec.dim() {
        return Err(Error::InvalidSpec(format!(
            "expected {} power sums, got {}",
            spec.dim(),
            powersums.len()
        )));
    }
    if powersums.iter().any(|p| p.spec() != spec) {
        return Err(Error::SpecMismatch);
    }
    let mut c = vec![GradedClass::one(spec)];
    for k in 1..=spec.dim() {
        let mut acc = GradedClass::zero(spec);
        for i in 1..=k {
            acc = &acc + &(&c[k - i] * &powersums[i - 1]).scale(&sign(i - 1));
        }
        c.push(acc.scale(&(Rational::from_integer(1.into()) / int(k as i64))));
    }
    c.remove(0);
    Ok(c)
}

/// `ch = rank + Σ_{k≥1} p_k / k!` of a bundle whose Chern classes are the
/// ring generators.
pub fn chern_character(spec: RingSpec, rank: usize) -> GradedClass {
    chern_to_powersums(spec)
        .iter()
        .enumerate()
        .fold(
            GradedClass::constant(spec, int(rank as i64)),
            |acc, (i, p)| &acc + &p.scale(&(int(1) / factorial(i as u64 + 1))),
        )
}

/// Adams operation `ψ^m`: scales the weight-`k` part by `m^k`. On a Chern
/// character this gives `Σ_i e^{m·x_i}`; `m = −1` is the dual bundle.
pub fn adams(ch: &GradedClass, m: i64) -> GradedClass {
    let m = int(m);
    ch.map_by_weight(|w, c| c * num_traits::pow(m.clone(), w))
}

/// `ch(Λ^p E)` as the `p`-th elementary symmetric function of the `e^{x_i}`:
/// `e_p = (1/p) Σ_{m=1}^{p} (−1)^{m−1} e_{p−m} ψ^m(ch E)`.
pub fn exterior_power_ch(ch_e: &GradedClass, rank: usize, p: usize) -> Result<GradedClass> {
    if p > rank {
        return Err(Error::ExteriorPowerRange { p, rank });
    }
    let spec = ch_e.spec();
    let psi: Vec<GradedClass> = (1..=p).map(|m| adams(ch_e, m as i64)).collect();
    let mut e = vec![GradedClass::one(spec)];
    for k in 1..=p {
        let mut acc = GradedClass::zero(spec);
        for m in 1..=k {
            acc = &acc + &(&e[k - m] * &psi[m - 1]).scale(&sign(m - 1));
        }
        e.push(acc.scale(&(int(1) / int(k as i64))));
    }
    Ok(e.pop().unwrap())
}

/// Todd class `exp(Σ_k γ_k p_k)` with `γ_k = [x^k] log(x / (1 − e^{−x}))`.
pub fn todd_class(spec: RingSpec) -> GradedClass {
    let gamma = todd_log_coefficients(spec.dim());
    let log_td = chern_to_powersums(spec)
        .iter()
        .enumerate()
        .filter(|(i, _)| !gamma.coeff(i + 1).is_zero())
        .fold(GradedClass::zero(spec), |acc, (i, p)| {
            &acc + &p.scale(&gamma.coeff(i + 1))
        });
    log_td.exp_class().expect("power sums have no weight-0 part")
}
