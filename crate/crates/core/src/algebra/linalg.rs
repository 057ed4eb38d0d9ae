//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::rational::Rational;

/// Why [`solve`] could not return a unique solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveFailure {
    /// The augmented row with this index reduced to `0 = c` with `c ≠ 0`.
    Inconsistent { row: usize },
    RankDeficient { rank: usize },
}

/// Reduces `mat` in place to reduced row echelon form and returns the pivot
/// columns. Pivots are taken in row order as the first nonzero entry.
pub fn rref(mat: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = Rational::one() / &mat[r][c];
        for v in mat[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i == r || mat[i][c].is_zero() {
                continue;
            }
            let f = mat[i][c].clone();
            let (pivot_row, other) = if i < r {
                let (lo, hi) = mat.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = mat.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (x, p) in other.iter_mut().zip(pivot_row.iter()) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mat: &[Vec<Rational>]) -> usize {
    let mut m = mat.to_vec();
    rref(&mut m).len()
}

/// Solves `a·x = b` for a unique `x`. Overdetermined systems are accepted as
/// long as they are consistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>, SolveFailure> {
    let unknowns = a.first().map_or(0, Vec::len);
    let augmented = |rows: usize| -> Vec<Vec<Rational>> {
        a[..rows]
            .iter()
            .zip(b)
            .map(|(row, rhs)| {
                let mut v = row.clone();
                v.push(rhs.clone());
                v
            })
            .collect()
    };
    let mut aug = augmented(a.len());
    let pivots = rref(&mut aug);
    if pivots.contains(&unknowns) {
        // First prefix of rows that is already contradictory.
        let row = (1..=a.len())
            .find(|&k| rref(&mut augmented(k)).contains(&unknowns))
            .map_or(a.len() - 1, |k| k - 1);
        return Err(SolveFailure::Inconsistent { row });
    }
    if pivots.len() < unknowns {
        return Err(SolveFailure::RankDeficient { rank: pivots.len() });
    }
    Ok((0..unknowns).map(|i| aug[i][unknowns].clone()).collect())
}

/// Basis of `{x : mat·x = 0}`.
pub fn null_space(mat: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = mat.first().map_or(0, Vec::len);
    let mut m = mat.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn transpose(mat: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = mat.first().map_or(0, Vec::len);
    (0..cols)
        .map(|c| mat.iter().map(|row| row[c].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn identity_system() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let b = vec![int(1), int(0), int(0)];
        assert_eq!(solve(&a, &b).unwrap(), b);
    }

    #[test]
    fn fractional_solution() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![int(1), int(2)];
        assert_eq!(solve(&a, &b).unwrap(), vec![rat(1, 5), rat(3, 5)]);
    }

    #[test]
    fn failures() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            solve(&a, &[int(1), int(2)]),
            Err(SolveFailure::RankDeficient { rank: 1 })
        );
        assert_eq!(
            solve(&a, &[int(1), int(3)]),
            Err(SolveFailure::Inconsistent { row: 1 })
        );
        // consistent overdetermined
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            solve(&a, &[int(2), int(3), int(5)]).unwrap(),
            vec![int(2), int(3)]
        );
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ker = null_space(&a);
        assert_eq!(ker.len(), 1);
        for row in &a {
            let dot: Rational = row.iter().zip(&ker[0]).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
        let left = null_space(&transpose(&a));
        assert_eq!(left, vec![vec![int(-2), int(1), int(0)]]);
    }
}
