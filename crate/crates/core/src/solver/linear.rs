use num_traits::Zero;

use crate::algebra::linalg::{self, SolveFailure};
use crate::algebra::Rational;
use crate::chern::{ChernNumbers, IntegralForm, Monomial, RingSpec};
use crate::error::{Error, Result};

/// One equation `coeffs · x = rhs`, tagged with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub provenance: String,
}

/// Exact linear system whose unknowns are top-weight Chern monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    spec: RingSpec,
    unknowns: Vec<Monomial>,
    rows: Vec<Row>,
}

impl LinearSystem {
    /// `unknowns` must be a permutation of the spec's top monomials.
    pub fn new(spec: RingSpec, unknowns: Vec<Monomial>) -> Result<Self> {
        let mut sorted = unknowns.clone();
        sorted.sort();
        if sorted != spec.top_monomials() {
            return Err(Error::InvalidSpec(
                "unknowns must be exactly the top-weight monomials".into(),
            ));
        }
        Ok(LinearSystem {
            spec,
            unknowns,
            rows: Vec::new(),
        })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn unknowns(&self) -> &[Monomial] {
        &self.unknowns
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn push(&mut self, row: Row) -> Result<()> {
        if row.coeffs.len() != self.unknowns.len() {
            return Err(Error::RowLength {
                expected: self.unknowns.len(),
                found: row.coeffs.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Adds the equation `∫ form = rhs`.
    pub fn push_form(
        &mut self,
        form: &IntegralForm,
        rhs: Rational,
        provenance: impl Into<String>,
    ) -> Result<()> {
        if form.spec() != self.spec {
            return Err(Error::SpecMismatch);
        }
        let coeffs = form.vector(&self.unknowns);
        self.push(Row {
            coeffs,
            rhs,
            provenance: provenance.into(),
        })
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn combine(&self, other: &LinearSystem) -> Result<LinearSystem> {
        if self.spec != other.spec || self.unknowns != other.unknowns {
            return Err(Error::SpecMismatch);
        }
        let mut out = self.clone();
        out.rows.extend(other.rows.iter().cloned());
        Ok(out)
    }

    /// The system restricted to the given row indices, in that order.
    pub fn select(&self, indices: &[usize]) -> LinearSystem {
        LinearSystem {
            spec: self.spec,
            unknowns: self.unknowns.clone(),
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    fn matrix(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| r.coeffs.clone()).collect()
    }

    /// Rank of the coefficient matrix.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix())
    }

    /// Basis of linear relations among the rows' left-hand sides: each
    /// vector `w` satisfies `Σ_i w_i · row_i = 0`.
    pub fn dependencies(&self) -> Vec<Vec<Rational>> {
        if self.rows.is_empty() {
            return Vec::new();
        }
        linalg::null_space(&linalg::transpose(&self.matrix()))
    }

    /// Exact Gaussian elimination. Fails if the rows contradict each other
    /// or leave some unknown undetermined.
    pub fn solve(&self) -> Result<ChernNumbers> {
        let rhs: Vec<Rational> = self.rows.iter().map(|r| r.rhs.clone()).collect();
        let x = linalg::solve(&self.matrix(), &rhs).map_err(|e| match e {
            SolveFailure::Inconsistent { row } => {
                Error::Inconsistent(self.rows[row].provenance.clone())
            }
            SolveFailure::RankDeficient { rank } => Error::RankDeficient {
                rank,
                unknowns: self.unknowns.len(),
            },
        })?;
        ChernNumbers::new(self.spec, self.unknowns.iter().cloned().zip(x))
    }

    /// `(provenance, lhs − rhs)` for every row at the given assignment.
    pub fn residuals(&self, nums: &ChernNumbers) -> Result<Vec<(String, Rational)>> {
        if nums.spec() != self.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(self
            .rows
            .iter()
            .map(|r| {
                let lhs: Rational = r
                    .coeffs
                    .iter()
                    .zip(&self.unknowns)
                    .map(|(c, m)| c * nums.get(m).expect("complete assignment"))
                    .sum();
                (r.provenance.clone(), lhs - &r.rhs)
            })
            .collect())
    }

    pub fn is_satisfied_by(&self, nums: &ChernNumbers) -> Result<bool> {
        Ok(self.residuals(nums)?.iter().all(|(_, r)| r.is_zero()))
    }
}
