use thiserror::Error;

use crate::ring::VarRef;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("variable {0} has no assigned value")]
    UnassignedVariable(VarRef),

    #[error("index {index} of family {family} lies outside the window {lo}..={hi}")]
    OutOfWindow {
        family: char,
        index: i64,
        lo: i64,
        hi: i64,
    },

    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("partition {partition} has more than {n} parts")]
    TooLong { partition: String, n: usize },

    #[error("tableau has {cells} cells but the target shape has {target}")]
    SizeMismatch { cells: usize, target: usize },

    #[error("index {index} is out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("specialization makes a denominator vanish")]
    ZeroDenominator,

    #[error("expected an integer, got {0}")]
    NonIntegerResult(String),

    #[error("polynomial is not symmetric under x{0} <-> x{1}")]
    NotSymmetric(usize, usize),

    #[error("expansion failed to reduce the leading monomial {0}")]
    NonTerminating(String),

    #[error("engines disagree: {0}")]
    EngineDisagreement(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
