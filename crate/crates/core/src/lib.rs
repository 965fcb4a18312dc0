//! Exact computation of interpolation (shifted) Jack polynomials, the
//! difference operators that diagonalize them, and the Jack polynomials and
//! Pieri coefficients recovered from them.

pub mod checks;
pub mod error;
pub mod interpolation;
pub mod jack;
pub mod linalg;
pub mod operators;
pub mod partitions;
pub mod scalars;
pub mod sympoly;

pub use error::{Error, Result};
