use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{binom_scalar, falling_factorial, Param, RatFunc, Rational, UniPoly};
use crate::error::Error;

/// Dynamically tagged coefficient: a rational number or a rational function.
///
/// Arithmetic is closed within a tag. The generic algorithms work on the
/// concrete types directly; this type exists for checked arithmetic and
/// serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Function(RatFunc),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn arith(&self, rhs: &Scalar, op: ArithOp) -> Result<Scalar, Error> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                ArithOp::Mul => a * b,
                ArithOp::Div => {
                    if b.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    a / b
                }
            })),
            (Scalar::Function(a), Scalar::Function(b)) => {
                a.compatible(b)?;
                let (a, b) = (a.clone(), b.clone());
                Ok(Scalar::Function(match op {
                    ArithOp::Add => a + b,
                    ArithOp::Sub => a - b,
                    ArithOp::Mul => a * b,
                    ArithOp::Div => {
                        if b.is_zero() {
                            return Err(Error::DivisionByZero);
                        }
                        a / b
                    }
                }))
            }
            _ => Err(Error::TagMismatch),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Function(f) => f.is_zero(),
        }
    }

    pub fn binom(&self, k: u32) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(binom_scalar(q, k)),
            Scalar::Function(f) => Scalar::Function(binom_scalar(f, k)),
        }
    }

    pub fn falling(&self, m: u32) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(falling_factorial(q, m)),
            Scalar::Function(f) => Scalar::Function(falling_factorial(f, m)),
        }
    }

    /// Evaluates a function at a parameter value; rationals pass through.
    pub fn substitute(&self, value: &Rational) -> Result<Rational, Error> {
        match self {
            Scalar::Rational(q) => Ok(q.clone()),
            Scalar::Function(f) => f.substitute(value),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Function(g) => write!(f, "{g}"),
        }
    }
}

/// Parses `p`, `p/q`, `-p/q` or `+p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// `num/den` in lowest terms, always with an explicit denominator.
pub fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Rational(String),
    Function {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        param: Option<Param>,
        num: Vec<String>,
        den: Vec<String>,
    },
}

fn poly_strings(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_to_string).collect()
}

fn parse_poly(v: &[String]) -> Result<UniPoly, Error> {
    v.iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()
        .map(UniPoly::new)
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rational(q) => Repr::Rational(rational_to_string(q)).serialize(serializer),
            Scalar::Function(f) => Repr::Function {
                param: f.parameter(),
                num: poly_strings(f.numer()),
                den: poly_strings(f.denom()),
            }
            .serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        match Repr::deserialize(deserializer)? {
            Repr::Rational(s) => parse_rational(&s).map(Scalar::Rational).map_err(D::Error::custom),
            Repr::Function { param, num, den } => {
                let num = parse_poly(&num).map_err(D::Error::custom)?;
                let den = parse_poly(&den).map_err(D::Error::custom)?;
                if den.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                let f = match param {
                    Some(p) => RatFunc::new(p, num, den),
                    None if num.is_constant() && den.is_constant() => RatFunc::constant(num.coeff(0) / den.coeff(0)),
                    None => return Err(D::Error::custom("non-constant function without parameter")),
                };
                Ok(Scalar::Function(f))
            }
        }
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Rational(q)
    }
}

impl From<RatFunc> for Scalar {
    fn from(f: RatFunc) -> Self {
        Scalar::Function(f)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::Rational(Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(Rational::new(n.into(), d.into()))
    }

    #[test]
    fn rational_arith() {
        assert_eq!(q(1, 2).arith(&q(1, 3), ArithOp::Add).unwrap(), q(5, 6));
        assert_eq!(q(1, 1).arith(&q(0, 1), ArithOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn tag_mismatch() {
        let f = Scalar::Function(RatFunc::param(Param::R));
        assert_eq!(q(1, 1).arith(&f, ArithOp::Add), Err(Error::TagMismatch));
        let g = Scalar::Function(RatFunc::param(Param::Alpha));
        assert!(matches!(f.arith(&g, ArithOp::Mul), Err(Error::ParamMismatch { .. })));
    }

    #[test]
    fn function_arith_and_pole() {
        let a = RatFunc::param(Param::Alpha);
        let f = Scalar::Function(a.clone() / (a.clone() + RatFunc::from_int(1)));
        let g = Scalar::Function(a.clone() + RatFunc::from_int(1));
        assert_eq!(f.arith(&g, ArithOp::Mul).unwrap(), Scalar::Function(a.clone()));
        let p = Scalar::Function(RatFunc::from_int(1) / (a - RatFunc::from_int(1)));
        assert!(p.substitute(&Rational::one()).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational(" 5 ").unwrap(), Rational::from_integer(5.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&q(-1, 2)).unwrap(), "\"-1/2\"");
        let a = RatFunc::param(Param::Alpha);
        let f = Scalar::Function(RatFunc::from_int(2) * a.clone() / (a + RatFunc::from_int(1)));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"param":"alpha","num":["0/1","2/1"],"den":["1/1","1/1"]}"#);
        let back: Scalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
