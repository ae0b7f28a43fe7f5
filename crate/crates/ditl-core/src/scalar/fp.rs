//! Prime fields with runtime modulus.

use crate::error::Error;
use crate::scalar::{Rational, Ring};
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use num::ToPrimitive;

/// An element of `F_p`; carries its modulus so mixed-field bugs surface fast.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElem {
    pub residue: u64,
    pub modulus: u64,
}

impl fmt::Debug for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// The field `F_p` as a ring value. `p` must be prime.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(crate::numbers::is_prime(p), "modulus must be prime");
        PrimeField { p }
    }

    pub fn elem(&self, n: i64) -> FpElem {
        self.from_int(n)
    }

    fn reduce(&self, n: u64) -> FpElem {
        FpElem {
            residue: n % self.p,
            modulus: self.p,
        }
    }

    fn check(&self, a: &FpElem) {
        assert_eq!(a.modulus, self.p, "prime field modulus mismatch");
    }

    /// Image of an exact rational; fails when `p` divides the denominator.
    pub fn from_rational(&self, r: &Rational) -> Result<FpElem, Error> {
        let p_big = num::BigInt::from(self.p);
        let num = ((r.numer() % &p_big) + &p_big) % &p_big;
        let den = ((r.denom() % &p_big) + &p_big) % &p_big;
        let num = num.to_u64().expect("reduced residue fits u64");
        let den = den.to_u64().expect("reduced residue fits u64");
        let den_inv = self
            .inv(&FpElem {
                residue: den,
                modulus: self.p,
            })
            .ok_or(Error::UnsupportedRing("denominator vanishes mod p"))?;
        Ok(self.mul(
            &FpElem {
                residue: num,
                modulus: self.p,
            },
            &den_inv,
        ))
    }

    /// Multiplicative order of `a`, by factoring p-1 would be overkill here:
    /// plain iteration is fine for the small moduli this crate uses.
    pub fn order(&self, a: &FpElem) -> u64 {
        self.check(a);
        assert!(a.residue != 0, "zero has no multiplicative order");
        let mut x = *a;
        let mut ord = 1u64;
        while x.residue != 1 {
            x = self.mul(&x, a);
            ord += 1;
        }
        ord
    }

    /// Deterministic search for an element of exact multiplicative order `n`
    /// (requires `n | p-1`).
    pub fn root_of_unity(&self, n: u64) -> Option<FpElem> {
        if n == 0 || (self.p - 1) % n != 0 {
            return None;
        }
        let cof = (self.p - 1) / n;
        for c in 2..self.p {
            let z = self.pow(&self.reduce(c), cof.try_into().ok()?);
            if z.residue != 1 && self.order(&z) == n {
                return Some(z);
            }
        }
        None
    }
}

impl Ring for PrimeField {
    type Elem = FpElem;

    fn zero(&self) -> FpElem {
        self.reduce(0)
    }

    fn one(&self) -> FpElem {
        self.reduce(1)
    }

    fn from_int(&self, n: i64) -> FpElem {
        let m = n.rem_euclid(self.p as i64) as u64;
        self.reduce(m)
    }

    fn add(&self, a: &FpElem, b: &FpElem) -> FpElem {
        self.check(a);
        self.check(b);
        self.reduce(a.residue + b.residue)
    }

    fn sub(&self, a: &FpElem, b: &FpElem) -> FpElem {
        self.check(a);
        self.check(b);
        self.reduce(a.residue + self.p - b.residue)
    }

    fn mul(&self, a: &FpElem, b: &FpElem) -> FpElem {
        self.check(a);
        self.check(b);
        let prod = (a.residue as u128 * b.residue as u128) % self.p as u128;
        self.reduce(prod as u64)
    }

    fn neg(&self, a: &FpElem) -> FpElem {
        self.check(a);
        self.reduce(self.p - a.residue % self.p)
    }

    fn is_zero(&self, a: &FpElem) -> bool {
        self.check(a);
        a.residue == 0
    }

    fn inv(&self, a: &FpElem) -> Option<FpElem> {
        self.check(a);
        if a.residue == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let mut e = self.p - 2;
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        Some(acc)
    }

    fn format(&self, a: &FpElem) -> String {
        format!("{} mod {}", a.residue, a.modulus)
    }

    fn parse(&self, s: &str) -> Result<FpElem, Error> {
        let body = s.trim();
        let (r, p) = match body.split_once("mod") {
            Some((r, p)) => (r.trim(), p.trim()),
            None => (body, ""),
        };
        let residue = r
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad residue `{r}`")))?;
        if !p.is_empty() {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus `{p}`")))?;
            if p != self.p {
                return Err(Error::Parse("modulus differs from field".to_string()));
            }
        }
        Ok(self.from_int(residue))
    }
}
