//! Exact rational arithmetic.
//!
//! Every quantity in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (positive denominator, fully reduced).
//! Parsing accepts integers, fractions, and finite decimals; display always
//! produces the canonical `n` or `n/d` form, so formatting then parsing
//! returns the identical value.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number in canonical form.
///
/// Canonical form means the denominator is positive and shares no factor
/// with the numerator; equality and ordering are therefore value equality.
/// The wrapped representation is never exposed, so the canonical-form
/// invariant cannot be broken from outside.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(BigRational);

/// Why a rational literal failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
}

/// Division by an exact zero.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("division by zero")]
pub struct DivisionByZero;

impl Rational {
    /// Builds `numer / denom` in canonical form.
    ///
    /// Panics if `denom` is zero; use [`Rational::checked_div`] when the
    /// divisor is not a literal.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, DivisionByZero> {
        if rhs.is_zero() {
            Err(DivisionByZero)
        } else {
            Ok(Rational(&self.0 / &rhs.0))
        }
    }

    fn from_big(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

/// Canonical rendering: `n` for integers, `n/d` otherwise, sign on the
/// numerator. This is the exchange format; it re-parses to the same value.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}

/// Accepted grammar: `[+-]? digits`, `[+-]? digits "/" digits` with a nonzero
/// denominator, or `[+-]? digits "." digits` (a finite decimal, converted
/// exactly). No whitespace, no exponents, no sign inside the denominator.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let malformed = || ParseRationalError::Malformed(s.to_string());
        let (negative, body) = match s.as_bytes()[0] {
            b'+' => (false, &s[1..]),
            b'-' => (true, &s[1..]),
            _ => (false, s),
        };
        let value = if let Some((numer, denom)) = body.split_once('/') {
            let numer = parse_digits(numer).ok_or_else(malformed)?;
            let denom = parse_digits(denom).ok_or_else(malformed)?;
            if denom.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            BigRational::new(numer, denom)
        } else if let Some((int_part, frac_part)) = body.split_once('.') {
            let int_part = parse_digits(int_part).ok_or_else(malformed)?;
            let frac_digits = frac_part.len();
            let frac_part = parse_digits(frac_part).ok_or_else(malformed)?;
            let scale = num_traits::pow(BigInt::from(10), frac_digits);
            BigRational::new(int_part * &scale + frac_part, scale)
        } else {
            BigRational::from_integer(parse_digits(body).ok_or_else(malformed)?)
        };
        Ok(Rational(if negative { -value } else { value }))
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational::from_big((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational::from_big((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational::from_big((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational::from_big((&self.0).$method(&rhs.0))
            }
        }
    };
}

binary_op!(Add, add);
binary_op!(Sub, sub);
binary_op!(Mul, mul);
// Panics on a zero divisor, like integer division; see `checked_div`.
binary_op!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}
