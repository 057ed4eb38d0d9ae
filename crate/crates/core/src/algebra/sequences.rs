//! Bernoulli numbers, Chebyshev polynomials and the Todd logarithm.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::UniPoly;
use super::rational::{factorial, int, Rational};
use super::series::TruncSeries;

/// Bernoulli numbers `B_0..=B_m` with `B_1 = −1/2`, from
/// `Σ_{j=0}^{k} binom(k+1, j) B_j = 0`.
fn bernoulli_table(m: usize) -> Vec<Rational> {
    let mut b = Vec::with_capacity(m + 1);
    b.push(int(1));
    for k in 1..=m {
        let mut acc = Rational::zero();
        let mut binom = BigInt::from(1); // binom(k+1, j)
        for (j, bj) in b.iter().enumerate() {
            acc += bj * Rational::from_integer(binom.clone());
            binom = binom * (k + 1 - j) / (j + 1);
        }
        // binom(k+1, k) = k + 1
        b.push(-acc / int(k as i64 + 1));
    }
    b
}

/// `B_m` (convention `B_1 = −1/2`).
pub fn bernoulli(m: usize) -> Rational {
    bernoulli_table(m).pop().unwrap()
}

/// `b_{2k} = B_{2k} / (4k·(2k)!)`, with `b_0 = 1`.
pub fn modified_bernoulli(two_k: usize) -> Rational {
    assert!(two_k.is_multiple_of(2), "modified Bernoulli numbers have even index");
    if two_k == 0 {
        return int(1);
    }
    let k = (two_k / 2) as i64;
    bernoulli(two_k) / (int(4 * k) * factorial(two_k as u64))
}

/// Chebyshev polynomial of the first kind, `T_0 = 1`, `T_1 = y`,
/// `T_{m+1} = 2y·T_m − T_{m−1}`.
pub fn chebyshev_t(k: usize) -> UniPoly {
    let two_y = UniPoly::linear(int(2), int(0));
    let mut prev = UniPoly::constant(int(1));
    if k == 0 {
        return prev;
    }
    let mut cur = UniPoly::t();
    for _ in 1..k {
        let next = &(&two_y * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `γ_0..=γ_order` with `log(x / (1 − e^{−x})) = Σ γ_k x^k`.
///
/// The Todd class is `exp(Σ_k γ_k p_k)` in terms of the power sums `p_k` of
/// the Chern roots.
pub fn todd_log_coefficients(order: usize) -> TruncSeries {
    // (1 − e^{−x}) / x = Σ_j (−1)^j x^j / (j+1)!
    let denom = TruncSeries::from_fn(order, |j| {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        int(sign) / factorial(j as u64 + 1)
    });
    denom
        .log()
        .expect("constant term is 1")
        .scale(&int(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    /// Independent route: Akiyama–Tanigawa algorithm, which produces the
    /// `B_1 = +1/2` convention; even indices agree.
    fn akiyama_tanigawa(m: usize) -> Rational {
        let mut a = Vec::with_capacity(m + 1);
        for k in 0..=m {
            a.push(rat(1, k as i64 + 1));
            for j in (1..=k).rev() {
                a[j - 1] = int(j as i64) * (&a[j - 1] - &a[j]);
            }
        }
        a[0].clone()
    }

    #[test]
    fn small_bernoulli() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(modified_bernoulli(2), rat(1, 48));
        assert_eq!(modified_bernoulli(0), int(1));
    }

    #[test]
    fn bernoulli_matches_akiyama_tanigawa() {
        for m in (2..=20).step_by(2) {
            assert_eq!(bernoulli(m), akiyama_tanigawa(m), "B_{m}");
        }
    }

    #[test]
    fn chebyshev() {
        assert_eq!(chebyshev_t(0), UniPoly::constant(int(1)));
        assert_eq!(
            chebyshev_t(2),
            UniPoly::new(vec![int(-1), int(0), int(2)])
        );
        assert_eq!(
            chebyshev_t(4),
            UniPoly::new(vec![int(1), int(0), int(-8), int(0), int(8)])
        );
        for k in 0..=12 {
            assert_eq!(chebyshev_t(k).eval(&int(1)), int(1));
        }
    }

    #[test]
    fn chebyshev_is_cosine_multiple_angle() {
        // T_m(T_n(y)) = T_{mn}(y)
        assert_eq!(chebyshev_t(2).compose(&chebyshev_t(3)), chebyshev_t(6));
    }

    #[test]
    fn todd_log() {
        let g = todd_log_coefficients(8);
        assert_eq!(g.coeff(0), int(0));
        assert_eq!(g.coeff(1), rat(1, 2));
        // x/(1−e^{−x}) = 1 + x/2 + x²/12 + …, so the log has x²/12 − x²/8
        assert_eq!(g.coeff(2), rat(-1, 24));
        assert_eq!(g.coeff(3), int(0));
        assert_eq!(g.coeff(4), rat(1, 2880));
        assert_eq!(g.coeff(5), int(0));
    }

    #[test]
    fn todd_log_is_bernoulli() {
        // log(x/(1−e^{−x})) = x/2 − Σ_{k≥1} B_{2k} x^{2k} / (2k·(2k)!)
        let g = todd_log_coefficients(12);
        for k in 1..=6usize {
            let expected = -bernoulli(2 * k) / (int(2 * k as i64) * factorial(2 * k as u64));
            assert_eq!(g.coeff(2 * k), expected);
        }
    }
}
