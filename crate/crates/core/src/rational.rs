use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form: positive denominator,
/// coprime parts, zero stored as `0/1`.
///
/// Division is only exposed through fallible methods; a zero divisor is an
/// error, never a value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer / denom` in canonical form.
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero { index: None });
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero { index: None });
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let magnitude = i32::try_from(exp.unsigned_abs())
            .map_err(|_| Error::InvalidSpec(format!("exponent {exp} too large")))?;
        let base = if exp < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        Ok(Rational(num_traits::pow(base.0, magnitude as usize)))
    }

    /// Larger of the numerator and denominator bit lengths.
    pub fn bits(&self) -> u64 {
        self.numer().bits().max(self.denom().bits())
    }

    /// Nearest `f64`, saturating to infinity for huge magnitudes. Only for
    /// display and plotting.
    pub fn to_f64(&self) -> f64 {
        if let Some(v) = self.0.to_f64() {
            return v;
        }
        // Fall back to a scaled quotient for values beyond the direct path.
        let shift = self.numer().bits() as i64 - self.denom().bits() as i64;
        let sign = if self.numer().sign() == Sign::Minus {
            -1.0
        } else {
            1.0
        };
        if shift > 1100 {
            sign * f64::INFINITY
        } else if shift < -1100 {
            sign * 0.0
        } else {
            f64::NAN
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts exactly `-?\d+(/\d+)?`.
    fn from_str(text: &str) -> Result<Self> {
        let malformed = || Error::MalformedRational(text.to_string());
        let is_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());

        let unsigned = text.strip_prefix('-').unwrap_or(text);
        let (num, den) = match unsigned.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (unsigned, None),
        };
        if !is_digits(num) || !den.is_none_or(is_digits) {
            return Err(malformed());
        }
        let numer: BigInt = text[..text.len() - den.map_or(0, |d| d.len() + 1)]
            .parse()
            .map_err(|_| malformed())?;
        let denom: BigInt = match den {
            Some(d) => d.parse().map_err(|_| malformed())?,
            None => BigInt::one(),
        };
        Rational::from_bigints(numer, denom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl std::ops::Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}
