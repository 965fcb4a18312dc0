//! Coefficient rings.
//!
//! Every algorithm in the crate is generic over [`Field`]. Two fields are
//! provided: exact rationals ([`Rational`], a `BigRational`) and normalized
//! rational functions in one formal parameter ([`RatFunc`]). The tagged
//! [`Scalar`] union is the dynamically typed face used at the I/O boundary.

mod ratfunc;
mod scalar;
mod unipoly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use ratfunc::RatFunc;
pub use scalar::{parse_rational, rational_to_string, Scalar};
pub use unipoly::UniPoly;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Name of the formal parameter a rational function is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    R,
    Alpha,
    T,
}

impl Param {
    pub fn symbol(self) -> &'static str {
        match self {
            Param::R => "r",
            Param::Alpha => "α",
            Param::T => "t",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A commutative field with exact arithmetic.
///
/// Division by zero panics, as it does for `BigRational`; checked variants
/// live on [`Scalar`].
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Sub<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// The value as a rational number, if it is a constant.
    fn to_rational(&self) -> Option<Rational>;

    fn to_scalar(&self) -> Scalar;

    /// Rough size of the representation; smaller is a better pivot.
    fn weight(&self) -> usize;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self)
        }
    }

    /// Sign and magnitude for display; the magnitude is parenthesized when it
    /// is not a single term.
    fn signed_display(&self) -> (bool, String) {
        let s = self.to_string();
        match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        }
    }

    /// Quotient known in advance to be exact (as in fraction-free elimination).
    fn exact_div(&self, d: &Self) -> Self {
        self.clone() / d
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc *= self;
        }
        acc
    }
}

impl Field for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }

    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// Falling factorial `a (a-1) ... (a-m+1)`; equals one for `m = 0`.
pub fn falling_factorial<F: Field>(a: &F, m: u32) -> F {
    let mut acc = F::one();
    for i in 0..m {
        acc *= &(a.clone() - F::from_int(i as i64));
    }
    acc
}

/// Generalized binomial coefficient `a (a-1) ... (a-k+1) / k!`.
pub fn binom_scalar<F: Field>(a: &F, k: u32) -> F {
    let mut fact = BigInt::one();
    for i in 2..=k {
        fact *= BigInt::from(i);
    }
    falling_factorial(a, k) / F::from_rational(&Rational::from_integer(fact))
}

/// Ordinary binomial coefficient as a big integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&q(3, 1), 2), q(6, 1));
        assert_eq!(falling_factorial(&q(2, 1), 3), q(0, 1));
        assert_eq!(falling_factorial(&q(7, 2), 0), q(1, 1));
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom_scalar(&q(3, 1), 2), q(3, 1));
        let r = RatFunc::param(Param::R);
        assert_eq!(binom_scalar(&-r.clone(), 0), RatFunc::one());
        let expected = (r.clone() * &r + &r) / RatFunc::from_int(2);
        assert_eq!(binom_scalar(&-r, 2), expected);
    }

    #[test]
    fn integer_binomial() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }
}
