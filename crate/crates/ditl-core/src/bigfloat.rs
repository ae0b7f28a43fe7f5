//! Minimal fixed-point big-float support for the closed cosine dimension
//! formula: 256 fractional bits, enough headroom for a relative 1e-20
//! integrality check. Only what that one formula needs lives here.

use crate::error::Error;
use alloc::string::ToString;
use num::bigint::BigInt;
use num::{One, Signed, Zero};

/// Fractional bits carried by every [`Fx`] value.
pub const PREC: u32 = 256;

/// A fixed-point real: `mantissa / 2^PREC`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fx(pub BigInt);

impl Fx {
    pub fn zero() -> Self {
        Fx(BigInt::zero())
    }

    pub fn one() -> Self {
        Fx(BigInt::one() << PREC)
    }

    pub fn from_u64(n: u64) -> Self {
        Fx(BigInt::from(n) << PREC)
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx(&self.0 - &o.0)
    }

    pub fn neg(&self) -> Fx {
        Fx(-&self.0)
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx((&self.0 * &o.0) >> PREC)
    }

    pub fn div_u64(&self, d: u64) -> Fx {
        Fx(&self.0 / BigInt::from(d))
    }

    pub fn shl(&self, bits: u32) -> Fx {
        Fx(&self.0 << bits)
    }

    pub fn powi(&self, e: u32) -> Fx {
        let mut base = self.clone();
        let mut acc = Fx::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_zero_mantissa(&self) -> bool {
        self.0.is_zero()
    }

    /// Round to the nearest integer, insisting the value sits within relative
    /// `10^-20` of it.
    pub fn to_integer_checked(&self) -> Result<BigInt, Error> {
        let unit = BigInt::one() << PREC;
        let half = BigInt::one() << (PREC - 1);
        let n = if self.0.is_negative() {
            -((-&self.0 + &half) / &unit)
        } else {
            (&self.0 + &half) / &unit
        };
        let diff = (&self.0 - &n * &unit).abs();
        let scale = self.0.abs().max(unit);
        // diff / scale <= 1e-20  <=>  diff * 10^20 <= scale
        let tol = BigInt::from(10u8).pow(20);
        if &diff * &tol <= scale {
            Ok(n)
        } else {
            Err(Error::ToleranceBreach(self.0.to_string()))
        }
    }
}

/// `atan(1/x)` by the Gregory series, exact mantissa until terms vanish.
fn atan_inv(x: u64) -> Fx {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut term = (BigInt::one() << PREC) / BigInt::from(x);
    let mut acc = BigInt::zero();
    let mut k = 0u64;
    let mut sign = true;
    while !term.is_zero() {
        let t = &term / BigInt::from(2 * k + 1);
        if sign {
            acc += &t;
        } else {
            acc -= &t;
        }
        term = &term / &x2;
        k += 1;
        sign = !sign;
    }
    Fx(acc)
}

/// Machin's formula; error well below one ulp at 256 bits.
pub fn pi() -> Fx {
    let a = atan_inv(5);
    let b = atan_inv(239);
    Fx(&a.0 * 16 - &b.0 * 4)
}

/// Taylor cosine; intended for |x| <= pi.
pub fn cos(x: &Fx) -> Fx {
    let x2 = x.mul(x);
    let mut term = Fx::one();
    let mut acc = Fx::one();
    let mut j = 0u64;
    loop {
        // term_{j+1} = -term_j * x^2 / ((2j+1)(2j+2))
        term = term.mul(&x2).div_u64((2 * j + 1) * (2 * j + 2)).neg();
        if term.is_zero_mantissa() {
            break;
        }
        acc = acc.add(&term);
        j += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        // 3.14159265358979323846... -> floor(pi * 10^18)
        let p = pi();
        let scaled = (&p.0 * BigInt::from(10u64).pow(18)) >> PREC;
        assert_eq!(scaled, BigInt::parse_bytes(b"3141592653589793238", 10).unwrap());
    }

    #[test]
    fn cosine_special_values() {
        let p = pi();
        // cos(pi/3) = 1/2
        let c = cos(&p.div_u64(3));
        let half = Fx::one().div_u64(2);
        let diff = c.sub(&half).0.abs();
        assert!(diff < (BigInt::one() << (PREC - 200)));
        // cos(pi/2) = 0
        let c2 = cos(&p.div_u64(2));
        assert!(c2.0.abs() < (BigInt::one() << (PREC - 200)));
    }

    #[test]
    fn integer_rounding_guard() {
        let almost = Fx(Fx::from_u64(36).0 + BigInt::one());
        assert_eq!(almost.to_integer_checked().unwrap(), BigInt::from(36));
        let off = Fx(Fx::from_u64(36).0 + (BigInt::one() << (PREC - 30)));
        assert!(off.to_integer_checked().is_err());
    }
}
