use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Field, Param, Rational, Scalar, UniPoly};
use crate::error::Error;

/// Rational function in one formal parameter over the rationals.
///
/// Always stored with coprime numerator and denominator and a monic
/// denominator, so equality is structural. Constants carry no parameter
/// and combine freely with functions of any parameter; combining two
/// non-constant functions in different parameters is an error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    param: Option<Param>,
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// The parameter itself, `z/1`.
    pub fn param(p: Param) -> Self {
        RatFunc {
            param: Some(p),
            num: UniPoly::from_ints(&[0, 1]),
            den: UniPoly::one(),
        }
    }

    pub fn constant(q: Rational) -> Self {
        RatFunc {
            param: None,
            num: UniPoly::constant(q),
            den: UniPoly::one(),
        }
    }

    pub fn from_poly(p: Param, num: UniPoly) -> Self {
        Self::from_parts(Some(p), num, UniPoly::one())
    }

    /// Normalizes `num / den`; panics if `den` is zero.
    pub fn new(p: Param, num: UniPoly, den: UniPoly) -> Self {
        Self::from_parts(Some(p), num, den)
    }

    fn from_parts(param: Option<Param>, num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        let (num, den) = if lc.is_one() {
            (num, den)
        } else {
            let inv = lc.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        let param = if num.is_constant() && den.is_constant() {
            None
        } else {
            param
        };
        RatFunc { param, num, den }
    }

    pub fn parameter(&self) -> Option<Param> {
        self.param
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.param.is_none()
    }

    /// Evaluates at a rational parameter value.
    pub fn substitute(&self, value: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(value);
        if d.is_zero() {
            return Err(Error::Pole {
                value: value.to_string(),
            });
        }
        Ok(self.num.eval(value) / d)
    }

    /// `f(1/z)`, relabelled with the parameter `to`.
    ///
    /// This is the bridge between the `r` world and the `α = 1/r` world.
    pub fn invert_param(&self, to: Param) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let num = self.num.reversed();
        let den = self.den.reversed();
        // num(1/z)/den(1/z) = z^dd rev(num) / (z^dn rev(den))
        let (num, den) = if dd >= dn {
            (num.shift_up(dd - dn), den)
        } else {
            (num, den.shift_up(dn - dd))
        };
        Self::from_parts(Some(to), num, den)
    }

    /// Same function written in a different parameter name.
    pub fn rename(&self, to: Param) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        RatFunc {
            param: Some(to),
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    fn join(a: Option<Param>, b: Option<Param>) -> Option<Param> {
        Self::try_join(a, b).unwrap_or_else(|e| panic!("{e}"))
    }

    pub(crate) fn try_join(a: Option<Param>, b: Option<Param>) -> Result<Option<Param>, Error> {
        match (a, b) {
            (Some(x), Some(y)) if x != y => Err(Error::ParamMismatch { left: x, right: y }),
            (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
            (None, None) => Ok(None),
        }
    }

    /// Parameter compatibility check without performing arithmetic.
    pub fn compatible(&self, other: &RatFunc) -> Result<(), Error> {
        Self::try_join(self.param, other.param).map(|_| ())
    }

    fn add_ref(&self, rhs: &RatFunc) -> RatFunc {
        let param = Self::join(self.param, rhs.param);
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return rhs.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            let num = &self.num + &rhs.num;
            let param = if num.is_constant() { None } else { param };
            return RatFunc {
                param,
                num,
                den: UniPoly::one(),
            };
        }
        if self.den == rhs.den {
            return Self::from_parts(param, &self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::from_parts(param, num, &self.den * &rhs.den)
    }

    fn mul_ref(&self, rhs: &RatFunc) -> RatFunc {
        let param = Self::join(self.param, rhs.param);
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            let num = &self.num * &rhs.num;
            let param = if num.is_constant() { None } else { param };
            return RatFunc {
                param,
                num,
                den: UniPoly::one(),
            };
        }
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        Self::from_parts_reduced(param, &a * &c, &b * &d)
    }

    fn recip(&self) -> RatFunc {
        assert!(!self.num.is_zero(), "division by zero rational function");
        Self::from_parts_reduced(self.param, self.den.clone(), self.num.clone())
    }

    // Inputs already coprime; only the monic normalization remains.
    fn from_parts_reduced(param: Option<Param>, num: UniPoly, den: UniPoly) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        let (num, den) = if lc.is_one() {
            (num, den)
        } else {
            let inv = lc.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        let param = if num.is_constant() && den.is_constant() {
            None
        } else {
            param
        };
        RatFunc { param, num, den }
    }

    /// Integer numerator and denominator with no common integer content and a
    /// positive leading denominator coefficient.
    pub fn integer_parts(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let lcm = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let to_int = |p: &UniPoly| -> Vec<BigInt> { p.coeffs().iter().map(|c| (c * &lcm).to_integer()).collect() };
        let mut n = to_int(&self.num);
        let mut d = to_int(&self.den);
        let g = n.iter().chain(d.iter()).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            n.iter_mut().for_each(|c| *c = &*c / &g);
            d.iter_mut().for_each(|c| *c = &*c / &g);
        }
        (n, d)
    }
}

fn cancel(a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly) {
    if a.is_constant() || b.is_constant() {
        return (a.clone(), b.clone());
    }
    let g = a.gcd(b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_rem(&g).0, b.div_rem(&g).0)
    }
}

fn int_poly(coeffs: &[BigInt]) -> UniPoly {
    UniPoly::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.param.map(Param::symbol).unwrap_or("z");
        let (n, d) = self.integer_parts();
        let num = int_poly(&n);
        let den = int_poly(&d);
        let num_s = num.fmt_with(var);
        if den.is_one() {
            return f.write_str(&num_s);
        }
        let terms = |p: &UniPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count();
        let num_s = if terms(&num) > 1 { format!("({num_s})") } else { num_s };
        let den_s = den.fmt_with(var);
        let bare_den = den.is_constant() || (terms(&den) == 1 && den.leading().is_some_and(|c| c.is_one()));
        if bare_den {
            write!(f, "{num_s}/{den_s}")
        } else {
            write!(f, "{num_s}/({den_s})")
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            param: None,
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc {
            param: None,
            num: UniPoly::one(),
            den: UniPoly::one(),
        }
    }
}

impl Field for RatFunc {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }

    fn to_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Function(self.clone())
    }

    fn weight(&self) -> usize {
        let deg = self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0);
        let bits: u64 = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .map(|c| c.numer().bits() + c.denom().bits())
            .sum();
        (deg << 24) + bits as usize
    }

    fn signed_display(&self) -> (bool, String) {
        let neg = self.num.leading().is_some_and(|c| c < &Rational::zero());
        let mag = if neg { -self.clone() } else { self.clone() };
        let single = mag.den.is_one() && mag.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        let s = mag.to_string();
        (
            neg,
            if mag.is_constant() || (single && !s.contains('/')) {
                s
            } else {
                format!("({s})")
            },
        )
    }

    fn exact_div(&self, d: &Self) -> Self {
        if self.den.is_one() && d.den.is_one() && !d.num.is_zero() {
            let (q, rem) = self.num.div_rem(&d.num);
            if rem.is_zero() {
                let param = Self::join(self.param, d.param);
                let param = if q.is_constant() { None } else { param };
                return RatFunc {
                    param,
                    num: q,
                    den: UniPoly::one(),
                };
            }
        }
        self.clone() / d
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Add<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_ref(rhs)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_ref(&rhs)
    }
}

impl Sub<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_ref(&-rhs.clone())
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self.add_ref(&-rhs)
    }
}

impl Mul<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_ref(rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_ref(&rhs)
    }
}

impl Div<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.mul_ref(&rhs.recip())
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        self.mul_ref(&rhs.recip())
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            param: self.param,
            num: -self.num,
            den: self.den,
        }
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = self.add_ref(&-rhs.clone());
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = self.mul_ref(rhs);
    }
}
