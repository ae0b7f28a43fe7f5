//! Arbitrary-precision rationals, always in lowest terms with positive
//! denominator (maintained by `num::BigRational`).

use crate::error::Error;
use crate::scalar::Ring;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
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
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", RationalField.format(self))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", RationalField.format(self))
    }
}

/// The field of rationals as a ring value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational(BigRational::zero())
    }

    fn one(&self) -> Rational {
        Rational(BigRational::one())
    }

    fn from_int(&self, n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 + &b.0)
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 - &b.0)
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 * &b.0)
    }

    fn neg(&self, a: &Rational) -> Rational {
        Rational(-&a.0)
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.0.is_zero()
    }

    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.0.is_zero() {
            None
        } else {
            Some(Rational(a.0.recip()))
        }
    }

    fn format(&self, a: &Rational) -> String {
        if a.0.is_integer() {
            a.0.numer().to_string()
        } else {
            format!("{}/{}", a.0.numer(), a.0.denom())
        }
    }

    fn parse(&self, s: &str) -> Result<Rational, Error> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, Error> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator".to_string()));
                }
                Ok(Rational(BigRational::new(parse_int(n)?, d)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = RationalField;
        let x = Rational::new(4, -6);
        assert_eq!(r.format(&x), "-2/3");
        assert!(x.denom() > &BigInt::zero());
    }

    #[test]
    fn parse_round_trip() {
        let r = RationalField;
        for s in ["3/4", "-7", "0", "-22/7"] {
            let x = r.parse(s).unwrap();
            assert_eq!(r.format(&x), s);
        }
        assert!(r.parse("1/0").is_err());
        assert!(r.parse("q").is_err());
    }
}
