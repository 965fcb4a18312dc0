use thiserror::Error;

use crate::scalars::Param;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot combine a rational number with a rational function")]
    TagMismatch,
    #[error("parameter mismatch: {left} vs {right}")]
    ParamMismatch { left: Param, right: Param },
    #[error("pole at {value}")]
    Pole { value: String },
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("box ({row},{col}) lies outside the diagram")]
    BoxOutside { row: usize, col: usize },
    #[error("{inner:?} is not contained in {outer:?}")]
    NotContained { inner: Vec<u32>, outer: Vec<u32> },
    #[error("{outer:?} / {inner:?} is not a vertical strip")]
    NotVerticalStrip { inner: Vec<u32>, outer: Vec<u32> },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("polynomial is not divisible by the Vandermonde determinant")]
    NotDivisible,
    #[error("zero polynomial has no top component")]
    ZeroPolynomial,
    #[error("r = -{p}/{q} with q < n = {n} is not dominant")]
    NonDominantR { p: String, q: String, n: usize },
    #[error("rho is not {0}-dominant")]
    NonDominant(usize),
    #[error("singular linear system")]
    Singular,
    #[error("interpolation values must be keyed exactly by the partitions of degree <= {0}")]
    BadValues(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
