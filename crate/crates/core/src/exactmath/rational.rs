use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{Scalar, ScalarRing};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_integer(BigInt::from(n))
    }

    /// `n/d`; panics on a zero denominator.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::new(BigInt::from(n), BigInt::from(d)).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::ZeroOperand);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, e))
    }

    /// Total bit size of numerator and denominator; a rough height measure.
    pub fn bits(&self) -> u64 {
        self.0.numer().bits() + self.0.denom().bits()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_i64(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p/q` or a bare integer. Decimal and exponent notation are
/// rejected so no precision can be lost silently.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed rational `{s}`"));
        let parse_int = |t: &str, allow_sign: bool| -> Result<BigInt> {
            let digits = if allow_sign {
                t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t)
            } else {
                t
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let n = parse_int(n, true)?;
                let d = parse_int(d, false)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Rational::new(n, d)
            }
            None => Ok(Rational::from_integer(parse_int(s, true)?)),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl<'a> Neg for &'a Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// The field of rational numbers, as a coefficient ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl ScalarRing for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_rational(&self, r: &Rational) -> Rational {
        r.clone()
    }

    fn is_field(&self) -> bool {
        true
    }
}

impl Scalar for Rational {
    type Ring = Rationals;

    fn ring(&self) -> Rationals {
        Rationals
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn negate(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Result<Self> {
        self.recip()
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn mul_terms(a: &[(u64, Self)], b: &[(u64, Self)]) -> Vec<(u64, Self)> {
        super::zpoly::rational_mul_terms(a, b)
    }

    fn div_terms(a: &[(u64, Self)], b: &[(u64, Self)]) -> Result<Vec<(u64, Self)>> {
        super::zpoly::rational_div_terms(a, b)
    }

    fn poly_gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> Result<UniPoly<Self>> {
        super::gcd::modular_gcd(a, b)
    }
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, r| if r.denom().is_one() { acc } else { acc.lcm(r.denom()) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::frac(6, -8);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
        assert_eq!(r.to_string(), "-3/4");
        assert_eq!(Rational::frac(4, 2).to_string(), "2");
    }

    #[test]
    fn parse_accepts_fractions_and_integers() {
        assert_eq!("-3/4".parse::<Rational>().unwrap(), Rational::frac(-3, 4));
        assert_eq!("12".parse::<Rational>().unwrap(), Rational::from_i64(12));
        assert_eq!("4/6".parse::<Rational>().unwrap(), Rational::frac(2, 3));
    }

    #[test]
    fn parse_rejects_decimals_and_junk() {
        for bad in ["0.5", "1e3", "1/0", "", "1/-2", "a/b", "--1", "1/2/3"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
    }
}
