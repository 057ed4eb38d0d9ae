//! Brute-force checks of the symmetric-function machinery through the
//! splitting principle: Chern classes become elementary symmetric
//! polynomials in explicit roots, and a formal variable `t` records weight.

use hkrr_core::algebra::linalg;
use hkrr_core::algebra::{int, rat, Rational};
use hkrr_core::chern::{chern_character, exterior_power_ch, todd_class, GradedClass, RingSpec};

struct XorShift(u64);

impl XorShift {
    fn small(&mut self) -> Rational {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        let num = (self.0 % 15) as i64 - 7;
        let den = (self.0 / 15 % 3) as i64 + 1;
        rat(num, den)
    }

    fn roots(&mut self, k: usize) -> Vec<Rational> {
        (0..k).map(|_| self.small()).collect()
    }

    fn integer_roots(&mut self, k: usize) -> Vec<Rational> {
        (0..k).map(|_| self.small().ceil()).collect()
    }
}

/// `e_0, …, e_k` of the roots.
fn elementary(roots: &[Rational]) -> Vec<Rational> {
    let mut e = vec![int(1)];
    for x in roots {
        e.push(int(0));
        for j in (1..e.len()).rev() {
            let prev = &e[j - 1] * x;
            e[j] += prev;
        }
    }
    e
}

/// Monomial value with `c_j ↦ e_j(roots)`.
fn monomial_value(indices: &[u8], e: &[Rational]) -> Rational {
    indices
        .iter()
        .map(|&j| e.get(j as usize).cloned().unwrap_or_else(|| int(0)))
        .product()
}

/// Coefficients of `t^0..=t^dim` after `c_j ↦ e_j(roots)·t^j`.
fn eval_at_roots(class: &GradedClass, roots: &[Rational]) -> Vec<Rational> {
    let e = elementary(roots);
    let mut out = vec![int(0); class.spec().dim() + 1];
    for (m, c) in class.terms() {
        out[m.weight()] += c * monomial_value(m.indices(), &e);
    }
    out
}

fn series_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    let mut out = vec![int(0); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

/// `x / (1 − e^{−x})` through `x^8`.
fn todd_series() -> Vec<Rational> {
    vec![
        int(1),
        rat(1, 2),
        rat(1, 12),
        int(0),
        rat(-1, 720),
        int(0),
        rat(1, 30240),
        int(0),
        rat(-1, 1_209_600),
    ]
}

/// `Π_i Q(x_i t)` through `t^8`.
fn todd_product(roots: &[Rational]) -> Vec<Rational> {
    let q = todd_series();
    roots.iter().fold(
        {
            let mut one = vec![int(0); q.len()];
            one[0] = int(1);
            one
        },
        |acc, x| {
            let scaled: Vec<Rational> = q
                .iter()
                .enumerate()
                .map(|(k, c)| c * num_traits::pow(x.clone(), k))
                .collect();
            series_mul(&acc, &scaled)
        },
    )
}

#[test]
fn todd_matches_ten_root_oracle() {
    let spec = RingSpec::new(10, false).unwrap();
    let td = todd_class(spec);
    let mut rng = XorShift(0x9e37_79b9_7f4a_7c15);
    for d in 0..=8 {
        // Recover the e-expansion of the weight-d part by exact interpolation
        // over random root vectors.
        let monos = spec.monomials_of_weight(d);
        let samples = monos.len() + 6;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for _ in 0..samples {
            let roots = rng.integer_roots(10);
            let e = elementary(&roots);
            rows.push(monos.iter().map(|m| monomial_value(m.indices(), &e)).collect::<Vec<_>>());
            rhs.push(todd_product(&roots)[d].clone());
        }
        let coeffs = linalg::solve(&rows, &rhs).expect("sample points determine the expansion");
        for (m, c) in monos.iter().zip(&coeffs) {
            assert_eq!(&td.coeff(m), c, "weight {d}, monomial {m}");
        }
    }
}

#[test]
fn hk_todd_is_generic_todd_without_odd_classes() {
    let generic = todd_class(RingSpec::new(10, false).unwrap());
    let hk_spec = RingSpec::hyperkahler(5);
    let hk = todd_class(hk_spec);
    let restricted = generic
        .terms()
        .iter()
        .filter(|(m, _)| m.indices().iter().all(|j| j % 2 == 0))
        .fold(GradedClass::zero(hk_spec), |acc, (m, c)| {
            &acc + &GradedClass::monomial(hk_spec, m.clone(), c.clone())
        });
    assert_eq!(hk, restricted);
}

/// `Σ_{|S| = p} exp((Σ_{i∈S} x_i) t)` through `t^dim`.
fn exterior_oracle(roots: &[Rational], p: usize, dim: usize) -> Vec<Rational> {
    let mut out = vec![int(0); dim + 1];
    for mask in 0u32..(1 << roots.len()) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let s: Rational = (0..roots.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| roots[i].clone())
            .sum();
        let mut term = int(1);
        for (k, slot) in out.iter_mut().enumerate() {
            *slot += &term;
            term = term * &s / int(k as i64 + 1);
        }
    }
    out
}

#[test]
fn exterior_powers_match_subset_oracle() {
    let spec = RingSpec::new(4, false).unwrap();
    let mut rng = XorShift(12345);
    for rank in 1..=4 {
        let ch = chern_character(spec, rank);
        for _ in 0..5 {
            let roots = rng.roots(rank);
            let mut total = vec![int(0); 5];
            for p in 0..=rank {
                let lam = exterior_power_ch(&ch, rank, p).unwrap();
                let got = eval_at_roots(&lam, &roots);
                assert_eq!(got, exterior_oracle(&roots, p, 4), "rank {rank}, p {p}");
                for (t, g) in total.iter_mut().zip(&got) {
                    *t += g;
                }
            }
            // Σ_p ch(Λ^p E) = Π_i (1 + e^{x_i t})
            let mut prod = vec![int(1), int(0), int(0), int(0), int(0)];
            for x in &roots {
                let mut factor = vec![int(2)];
                let mut term = int(1);
                for k in 1..=4 {
                    term = term * x / int(k);
                    factor.push(term.clone());
                }
                prod = series_mul(&prod, &factor);
            }
            assert_eq!(total, prod);
        }
    }
}

#[test]
fn chern_character_is_sum_of_exponentials() {
    let spec = RingSpec::new(6, false).unwrap();
    let mut rng = XorShift(777);
    for rank in 1..=6 {
        let roots = rng.roots(rank);
        let got = eval_at_roots(&chern_character(spec, rank), &roots);
        assert_eq!(got, exterior_oracle(&roots, 1, 6));
    }
}
