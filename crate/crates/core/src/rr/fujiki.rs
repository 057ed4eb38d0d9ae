use num_traits::{One, Zero};

use crate::algebra::{factorial, int, Rational};
use crate::error::{Error, Result};

/// Beauville–Bogomolov Gram matrix of a list of named classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBGram {
    labels: Vec<String>,
    entries: Vec<Vec<Rational>>,
}

impl BBGram {
    /// Fails unless `entries` is square, symmetric and matches `labels`.
    pub fn new(labels: Vec<String>, entries: Vec<Vec<Rational>>) -> Result<Self> {
        let k = labels.len();
        if entries.len() != k || entries.iter().any(|r| r.len() != k) {
            return Err(Error::MalformedGram(format!(
                "{k} labels but a {}-row matrix",
                entries.len()
            )));
        }
        for i in 0..k {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::MalformedGram(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(BBGram { labels, entries })
    }

    /// Unlabelled gram; classes are named `a0, a1, …`.
    pub fn from_entries(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let labels = (0..entries.len()).map(|i| format!("a{i}")).collect();
        BBGram::new(labels, entries)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn q(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Parses a slot multiset like `F^5*Theta^5` (factors separated by `*`
    /// or whitespace) into class indices.
    pub fn parse_slots(&self, spec: &str) -> Result<Vec<usize>> {
        let mut slots = Vec::new();
        for factor in spec.split(|c: char| c == '*' || c.is_whitespace()) {
            if factor.is_empty() {
                continue;
            }
            let (label, exp) = match factor.split_once('^') {
                Some((l, e)) => (
                    l,
                    e.parse::<usize>()
                        .map_err(|_| Error::MalformedGram(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let idx = self
                .index_of(label)
                .ok_or_else(|| Error::MalformedGram(format!("unknown class {label:?}")))?;
            slots.extend(std::iter::repeat_n(idx, exp));
        }
        Ok(slots)
    }
}

/// Walks every perfect matching of the slots `free` (bitmask), pairing the
/// lowest free slot with each other free slot in turn. `visit` receives the
/// product of the pair weights along the path; a zero weight prunes the
/// branch without visiting the matchings below it.
fn walk_matchings(
    free: u64,
    weight: &impl Fn(usize, usize) -> Rational,
    partial: &Rational,
    visit: &mut impl FnMut(&Rational),
) {
    if free == 0 {
        visit(partial);
        return;
    }
    let first = free.trailing_zeros() as usize;
    let rest = free & !(1 << first);
    let mut others = rest;
    while others != 0 {
        let j = others.trailing_zeros() as usize;
        others &= others - 1;
        let w = weight(first, j);
        if !w.is_zero() {
            walk_matchings(rest & !(1 << j), weight, &(partial * w), visit);
        }
    }
}

/// Number of perfect matchings on `k` points, by enumeration.
pub fn count_perfect_matchings(k: usize) -> usize {
    assert!(k < 64, "at most 63 slots");
    if k % 2 == 1 {
        return 0;
    }
    let mut count = 0;
    walk_matchings((1u64 << k) - 1, &|_, _| Rational::one(), &Rational::one(), &mut |_| {
        count += 1
    });
    count
}

/// `∫ α_{s_1} ⌣ … ⌣ α_{s_{2n}}` from the polarized Fujiki relation.
///
/// The sum over `S_{2n}` counts each perfect matching of the slots
/// `2^n·n!` times, so the result is
/// `c_X · 2^n·n! / (2n)! · Σ_matchings Π q(α_i, α_j)`.
pub fn fujiki_polarized(c_x: &Rational, gram: &BBGram, slots: &[usize]) -> Result<Rational> {
    if slots.len() % 2 == 1 {
        return Err(Error::OddSlotCount(slots.len()));
    }
    if let Some(&bad) = slots.iter().find(|&&s| s >= gram.size()) {
        return Err(Error::SlotOutOfRange {
            index: bad,
            size: gram.size(),
        });
    }
    if slots.len() >= 64 {
        return Err(Error::MalformedGram(format!("{} slots is too many", slots.len())));
    }
    let n = slots.len() / 2;
    let mut sum = Rational::zero();
    walk_matchings(
        (1u64 << slots.len()) - 1,
        &|a, b| gram.q(slots[a], slots[b]).clone(),
        &Rational::one(),
        &mut |prod| sum += prod,
    );
    let weight = num_traits::pow(int(2), n) * factorial(n as u64) / factorial(2 * n as u64);
    Ok(c_x * weight * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn theta_fiber() -> BBGram {
        // q(F, F) = 0, q(Θ, F) = 1, q(Θ, Θ) = 0
        BBGram::new(
            vec!["F".into(), "Theta".into()],
            vec![vec![int(0), int(1)], vec![int(1), int(0)]],
        )
        .unwrap()
    }

    #[test]
    fn matching_counts() {
        let expected = [1, 0, 1, 0, 3, 0, 15, 0, 105, 0, 945, 0, 10395];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(count_perfect_matchings(k), e, "k = {k}");
        }
    }

    #[test]
    fn theta_five_fiber_five() {
        let g = theta_fiber();
        let slots = g.parse_slots("F^5*Theta^5").unwrap();
        assert_eq!(slots.len(), 10);
        assert_eq!(fujiki_polarized(&int(945), &g, &slots).unwrap(), int(120));
        // q(Θ) does not matter once F is isotropic and all F pair with Θ.
        let g2 = BBGram::new(
            vec!["F".into(), "Theta".into()],
            vec![vec![int(0), int(1)], vec![int(1), int(-7)]],
        )
        .unwrap();
        assert_eq!(fujiki_polarized(&int(945), &g2, &slots).unwrap(), int(120));
    }

    #[test]
    fn small_cases() {
        let g = BBGram::from_entries(vec![vec![int(3)]]).unwrap();
        assert_eq!(fujiki_polarized(&int(1), &g, &[0, 0]).unwrap(), int(3));
        let g = BBGram::from_entries(vec![vec![int(2), rat(5, 3)], vec![rat(5, 3), int(1)]]).unwrap();
        assert_eq!(fujiki_polarized(&int(7), &g, &[0, 1]).unwrap(), int(7) * rat(5, 3));
    }

    #[test]
    fn errors() {
        let g = theta_fiber();
        assert_eq!(
            fujiki_polarized(&int(1), &g, &[0, 1, 1]),
            Err(Error::OddSlotCount(3))
        );
        assert!(matches!(
            fujiki_polarized(&int(1), &g, &[0, 2]),
            Err(Error::SlotOutOfRange { index: 2, size: 2 })
        ));
        assert!(g.parse_slots("G^2").is_err());
        assert!(g.parse_slots("F^x").is_err());
        assert!(BBGram::from_entries(vec![vec![int(0), int(1)], vec![int(2), int(0)]]).is_err());
        assert!(BBGram::new(vec!["a".into()], vec![vec![int(0), int(1)]]).is_err());
    }

    /// Hafnian by recursion over subsets, memoized; independent of the
    /// matching walk.
    fn hafnian(q: &[Vec<Rational>]) -> Rational {
        fn go(mask: usize, q: &[Vec<Rational>], memo: &mut Vec<Option<Rational>>) -> Rational {
            if mask == 0 {
                return int(1);
            }
            if let Some(v) = &memo[mask] {
                return v.clone();
            }
            let i = mask.trailing_zeros() as usize;
            let rest = mask & !(1 << i);
            let mut acc = int(0);
            for j in 0..q.len() {
                if rest & (1 << j) != 0 {
                    acc += &q[i][j] * go(rest & !(1 << j), q, memo);
                }
            }
            memo[mask] = Some(acc.clone());
            acc
        }
        let k = q.len();
        go((1 << k) - 1, q, &mut vec![None; 1 << k])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn matches_hafnian(k in 1usize..=3, vals in prop::collection::vec(-5i64..6, 9),
                           powers in prop::collection::vec(0usize..4, 3)) {
            // random symmetric k×k gram, slots with even total count
            let entries: Vec<Vec<Rational>> = (0..k)
                .map(|i| (0..k).map(|j| int(vals[i.min(j) * 3 + i.max(j)])).collect())
                .collect();
            let g = BBGram::from_entries(entries.clone()).unwrap();
            let mut slots: Vec<usize> = (0..k).flat_map(|i| std::iter::repeat_n(i, powers[i])).collect();
            if slots.len() % 2 == 1 {
                slots.push(0);
            }
            let n = slots.len() / 2;
            let expanded: Vec<Vec<Rational>> = slots
                .iter()
                .map(|&a| slots.iter().map(|&b| entries[a][b].clone()).collect())
                .collect();
            let expected = num_traits::pow(int(2), n) * factorial(n as u64)
                / factorial(2 * n as u64) * hafnian(&expanded);
            prop_assert_eq!(fujiki_polarized(&int(1), &g, &slots).unwrap(), expected);
        }

        #[test]
        fn all_equal_slots_reduce_to_fujiki(n in 1usize..=6, num in -20i64..20, den in 1i64..10,
                                            cn in 1i64..1000) {
            let q = rat(num, den);
            let c = int(cn);
            let g = BBGram::from_entries(vec![vec![q.clone()]]).unwrap();
            let got = fujiki_polarized(&c, &g, &vec![0; 2 * n]).unwrap();
            prop_assert_eq!(got, c * num_traits::pow(q, n));
        }
    }
}
