use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// Dimension data of the ring: complex dimension `dim = 2n` and whether odd
/// Chern classes are absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    dim: usize,
    hk_mode: bool,
}

impl RingSpec {
    pub fn new(dim: usize, hk_mode: bool) -> Result<Self> {
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!(
                "dimension must be positive and even, got {dim}"
            )));
        }
        Ok(RingSpec { dim, hk_mode })
    }

    /// Hyperkähler ring of a `2n`-dimensional manifold.
    pub fn hyperkahler(n: usize) -> Self {
        RingSpec::new(2 * n, true).expect("2n is even")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hk_mode(&self) -> bool {
        self.hk_mode
    }

    pub fn is_generator(&self, j: usize) -> bool {
        (1..=self.dim).contains(&j) && !(self.hk_mode && j % 2 == 1)
    }

    pub fn generators(&self) -> Vec<usize> {
        (1..=self.dim).filter(|&j| self.is_generator(j)).collect()
    }

    /// All monomials of exactly the given weight, in increasing order.
    pub fn monomials_of_weight(&self, weight: usize) -> Vec<Monomial> {
        fn go(spec: &RingSpec, rest: usize, min: usize, cur: &mut Vec<u8>, out: &mut Vec<Monomial>) {
            if rest == 0 {
                out.push(Monomial(cur.clone()));
                return;
            }
            for j in min..=rest {
                if spec.is_generator(j) {
                    cur.push(j as u8);
                    go(spec, rest - j, j, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, weight, 1, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Monomials of weight `dim`, the domain of integration.
    pub fn top_monomials(&self) -> Vec<Monomial> {
        self.monomials_of_weight(self.dim)
    }
}

/// Product of Chern generators, stored as the sorted multiset of their
/// indices. The empty monomial is `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut indices: Vec<u8>) -> Self {
        indices.sort_unstable();
        Monomial(indices)
    }

    pub fn generator(j: usize) -> Self {
        Monomial(vec![j as u8])
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&j| j as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// `(index, exponent)` pairs in increasing index order.
    pub fn exponents(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &j in &self.0 {
            match out.last_mut() {
                Some((k, e)) if *k == j as usize => *e += 1,
                _ => out.push((j as usize, 1)),
            }
        }
        out
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial::new(v)
    }
}

impl fmt::Display for Monomial {
    /// `c2^3*c4`; the unit monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|(j, e)| if e == 1 { format!("c{j}") } else { format!("c{j}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("bad monomial {s:?}"));
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut idx = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim().strip_prefix('c').ok_or_else(bad)?;
            let (j, e) = match factor.split_once('^') {
                Some((j, e)) => (j, e.parse::<usize>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let j: u8 = j.parse().map_err(|_| bad())?;
            if j == 0 {
                return Err(bad());
            }
            idx.extend(std::iter::repeat_n(j, e));
        }
        Ok(Monomial::new(idx))
    }
}

/// Element of the truncated Chern ring. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    spec: RingSpec,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedClass {
    pub fn zero(spec: RingSpec) -> Self {
        GradedClass {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(spec: RingSpec, c: Rational) -> Self {
        GradedClass::zero(spec).with_term(Monomial::one(), c)
    }

    pub fn one(spec: RingSpec) -> Self {
        GradedClass::constant(spec, Rational::one())
    }

    /// The Chern class `c_j`: `1` for `j = 0`, zero when `c_j` is not a
    /// generator of the ring (odd `j` in hk mode, or `j > dim`).
    pub fn chern(spec: RingSpec, j: usize) -> Self {
        if j == 0 {
            GradedClass::one(spec)
        } else if spec.is_generator(j) {
            GradedClass::zero(spec).with_term(Monomial::generator(j), Rational::one())
        } else {
            GradedClass::zero(spec)
        }
    }

    /// `coeff · m`; dropped if `m` is above top weight or uses a missing
    /// generator.
    pub fn monomial(spec: RingSpec, m: Monomial, coeff: Rational) -> Self {
        GradedClass::zero(spec).with_term(m, coeff)
    }

    fn with_term(mut self, m: Monomial, c: Rational) -> Self {
        self.add_term(m, c);
        self
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero()
            || m.weight() > self.spec.dim
            || m.indices().iter().any(|&j| !self.spec.is_generator(j as usize))
        {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weight-0 coefficient.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// Homogeneous component of the given weight.
    pub fn component(&self, weight: usize) -> GradedClass {
        GradedClass {
            spec: self.spec,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == weight)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f(weight, coeff)` to every term.
    pub fn map_by_weight(&self, f: impl Fn(usize, &Rational) -> Rational) -> GradedClass {
        let mut out = GradedClass::zero(self.spec);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(m.weight(), c));
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> GradedClass {
        self.map_by_weight(|_, a| a * c)
    }

    fn check_spec(&self, other: &GradedClass) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GradedClass) -> Result<GradedClass> {
        self.check_spec(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Product, dropping every term of weight above `dim`.
    pub fn try_mul(&self, other: &GradedClass) -> Result<GradedClass> {
        self.check_spec(other)?;
        let mut out = GradedClass::zero(self.spec);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.weight() + mb.weight() > self.spec.dim {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> GradedClass {
        (0..e).fold(GradedClass::one(self.spec), |acc, _| &acc * self)
    }

    /// `Σ_m a^m / m!` for nilpotent `a` (zero weight-0 part). The sum stops
    /// once the powers vanish, which happens after at most `dim` steps.
    pub fn exp_class(&self) -> Result<GradedClass> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::NotNilpotent(c0));
        }
        let mut sum = GradedClass::one(self.spec);
        let mut term = GradedClass::one(self.spec);
        for m in 1..=self.spec.dim {
            term = (&term * self).scale(&(Rational::one() / int(m as i64)));
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
        }
        Ok(sum)
    }
}

impl Add for &GradedClass {
    type Output = GradedClass;

    /// Panics on spec mismatch; see [`GradedClass::try_add`].
    fn add(self, rhs: &GradedClass) -> GradedClass {
        self.try_add(rhs).expect("ring spec mismatch")
    }
}

impl Sub for &GradedClass {
    type Output = GradedClass;

    fn sub(self, rhs: &GradedClass) -> GradedClass {
        self + &(-rhs)
    }
}

impl Neg for &GradedClass {
    type Output = GradedClass;

    fn neg(self) -> GradedClass {
        self.scale(&int(-1))
    }
}

impl Mul for &GradedClass {
    type Output = GradedClass;

    /// Panics on spec mismatch; see [`GradedClass::try_mul`].
    fn mul(self, rhs: &GradedClass) -> GradedClass {
        self.try_mul(rhs).expect("ring spec mismatch")
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format_rational(c)
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("{}*{}", format_rational(c), m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
