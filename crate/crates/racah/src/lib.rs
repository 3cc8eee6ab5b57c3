//! Exact univariate and bivariate Racah polynomials, their difference operators on finite grids,
//! and zero-residual checks of the quadratic-algebra relations they realize.

pub mod algebra;
pub mod battery;
pub mod error;
pub mod exactnum;
pub mod gridop;
pub mod racah1;
pub mod racah2;
pub mod suites;

pub use error::{Error, Result};
pub use exactnum::Rational;

/// Which candidate form of a displayed formula to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    /// Exactly as displayed.
    Printed,
    /// With the misprint repaired.
    Corrected,
}
