use thiserror::Error;

use crate::algebra::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series constant term must be {expected}, got {found}")]
    ConstantTerm { expected: i64, found: Box<Rational> },

    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("ring specs differ")]
    SpecMismatch,

    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),

    #[error("class has nonzero weight-0 part {0}; exp needs a nilpotent argument")]
    NotNilpotent(Rational),

    #[error("exterior power {p} out of range for rank {rank}")]
    ExteriorPowerRange { p: usize, rank: usize },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("polynomial coefficient of t^{0} vanishes")]
    VanishingCoefficient(usize),

    #[error("expected an even number of class slots, got {0}")]
    OddSlotCount(usize),

    #[error("slot index {index} out of range for a Gram matrix with {size} classes")]
    SlotOutOfRange { index: usize, size: usize },

    #[error("malformed Gram matrix: {0}")]
    MalformedGram(String),

    #[error("expected exactly one rational root, found {0}")]
    RootCount(usize),

    #[error("linear system is inconsistent (row {0})")]
    Inconsistent(String),

    #[error("linear system has rank {rank} < {unknowns}; solution is not unique")]
    RankDeficient { rank: usize, unknowns: usize },

    #[error("row has {found} entries, expected {expected}")]
    RowLength { expected: usize, found: usize },

    #[error("need at least {0} divisors with distinct nonzero q-values")]
    TooFewDivisors(usize),

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}
