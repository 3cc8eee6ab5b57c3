use thiserror::Error;

use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pole: {what} vanishes at summation index {index}")]
    Pole { what: String, index: usize },

    #[error("invalid parameters: {0}")]
    Validity(String),

    #[error("stencil not closed on grid: offset {offset:?} at point {point:?} has coefficient {coefficient}")]
    Closure {
        offset: [i64; 2],
        point: [i64; 2],
        coefficient: Rational,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("value table is singular")]
    Singular,

    #[error("no diagonal weight solution: {0}")]
    NonDiagonalizable(String),

    #[error("relation catalog failed: {0}")]
    SuiteFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
