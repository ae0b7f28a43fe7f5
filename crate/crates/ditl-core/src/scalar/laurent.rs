//! Laurent polynomials in the formal variable `q` with rational coefficients.
//!
//! `q` stands in for `e^{i*theta}`: identities proved over this ring hold for
//! every specialization of `q`, in particular for roots of unity and for the
//! irrational angles defining the infinite dicyclic group.

use crate::error::Error;
use crate::scalar::{FpElem, PrimeField, Rational, RationalField, Ring};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// A finitely supported map exponent -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, Rational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn constant(c: Rational) -> Self {
        Laurent::single(0, c)
    }

    pub fn single(exp: i32, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !RationalField.is_zero(&coeff) {
            terms.insert(exp, coeff);
        }
        Laurent { terms }
    }

    /// The monomial `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Laurent::single(exp, Rational::from_int(1))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &Rational)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == 0)
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluate at `q = zeta` in a prime field. Fails if a coefficient
    /// denominator vanishes mod p.
    pub fn specialize(&self, field: &PrimeField, zeta: FpElem) -> Result<FpElem, Error> {
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let ze = if *e >= 0 {
                field.pow(&zeta, *e as u32)
            } else {
                let inv = field
                    .inv(&zeta)
                    .ok_or(Error::UnsupportedRing("zero specialization point"))?;
                field.pow(&inv, (-e) as u32)
            };
            let cf = field.from_rational(c)?;
            acc = field.add(&acc, &field.mul(&cf, &ze));
        }
        Ok(acc)
    }

    fn insert_add(&mut self, exp: i32, coeff: Rational) {
        let q = RationalField;
        let entry = self.terms.entry(exp).or_insert_with(|| q.zero());
        *entry = q.add(entry, &coeff);
        if q.is_zero(entry) {
            self.terms.remove(&exp);
        }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", LaurentRing.format(self))
    }
}

/// The ring of Laurent polynomials as a ring value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct LaurentRing;

impl Ring for LaurentRing {
    type Elem = Laurent;

    fn zero(&self) -> Laurent {
        Laurent::zero()
    }

    fn one(&self) -> Laurent {
        Laurent::constant(Rational::from_int(1))
    }

    fn from_int(&self, n: i64) -> Laurent {
        Laurent::constant(Rational::from_int(n))
    }

    fn add(&self, a: &Laurent, b: &Laurent) -> Laurent {
        let mut out = a.clone();
        for (e, c) in &b.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }

    fn sub(&self, a: &Laurent, b: &Laurent) -> Laurent {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Laurent, b: &Laurent) -> Laurent {
        let q = RationalField;
        let mut out = Laurent::zero();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                out.insert_add(ea + eb, q.mul(ca, cb));
            }
        }
        out
    }

    fn neg(&self, a: &Laurent) -> Laurent {
        Laurent {
            terms: a
                .terms
                .iter()
                .map(|(e, c)| (*e, RationalField.neg(c)))
                .collect(),
        }
    }

    fn is_zero(&self, a: &Laurent) -> bool {
        a.terms.is_empty()
    }

    fn inv(&self, a: &Laurent) -> Option<Laurent> {
        if a.terms.len() != 1 {
            return None;
        }
        let (e, c) = a.terms.iter().next()?;
        RationalField.inv(c).map(|ci| Laurent::single(-e, ci))
    }

    fn format(&self, a: &Laurent) -> String {
        if a.terms.is_empty() {
            return "0".to_string();
        }
        let q = RationalField;
        let mut out = String::new();
        for (i, (e, c)) in a.terms.iter().enumerate() {
            let neg = c < &q.zero();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if power.is_empty() {
                out.push_str(&q.format(&mag));
            } else if q.is_one(&mag) {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{}*{}", q.format(&mag), power));
            }
        }
        out
    }

    fn parse(&self, s: &str) -> Result<Laurent, Error> {
        let mut out = Laurent::zero();
        for (sign, term) in split_terms(s)? {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse("empty term".to_string()));
            }
            let (coeff_str, power_str) = match term.split_once('*') {
                Some((c, p)) => (Some(c.trim()), Some(p.trim())),
                None => {
                    if term.starts_with('q') {
                        (None, Some(term))
                    } else {
                        (Some(term), None)
                    }
                }
            };
            let mut coeff = match coeff_str {
                Some(c) => RationalField.parse(c)?,
                None => Rational::from_int(1),
            };
            if sign < 0 {
                coeff = RationalField.neg(&coeff);
            }
            let exp = match power_str {
                None => 0,
                Some("q") => 1,
                Some(p) => {
                    let rest = p
                        .strip_prefix("q^")
                        .ok_or_else(|| Error::Parse(format!("bad power `{p}`")))?;
                    rest.parse::<i32>()
                        .map_err(|_| Error::Parse(format!("bad exponent `{rest}`")))?
                }
            };
            out.insert_add(exp, coeff);
        }
        Ok(out)
    }
}

/// Split `s` into (+1/-1, term) pieces at top-level `+`/`-`, leaving the `-`
/// of a negative exponent (after `^`) intact.
fn split_terms(s: &str) -> Result<Vec<(i32, String)>, Error> {
    let mut pieces = Vec::new();
    let mut current = String::new();
    let mut sign = 1i32;
    let mut prev_non_space = ' ';
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && prev_non_space != '^' {
            if current.trim().is_empty() {
                if ch == '-' {
                    sign = -sign;
                }
            } else {
                pieces.push((sign, core::mem::take(&mut current)));
                sign = if ch == '-' { -1 } else { 1 };
            }
        } else {
            current.push(ch);
        }
        if !ch.is_whitespace() {
            prev_non_space = ch;
        }
    }
    if current.trim().is_empty() {
        return Err(Error::Parse("trailing operator".to_string()));
    }
    pieces.push((sign, current));
    Ok(pieces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Laurent {
        Laurent::q_pow(1)
    }

    #[test]
    fn format_matches_contract() {
        let r = LaurentRing;
        // 3*q^-2 + 1 - q^4
        let f = r.add(
            &Laurent::single(-2, Rational::from_int(3)),
            &r.add(&r.one(), &Laurent::single(4, Rational::from_int(-1))),
        );
        assert_eq!(r.format(&f), "3*q^-2 + 1 - q^4");
        assert_eq!(r.parse("3*q^-2 + 1 - q^4").unwrap(), f);
    }

    #[test]
    fn quantum_two_is_bar_invariant() {
        let r = LaurentRing;
        let two = r.add(&q(), &Laurent::q_pow(-1));
        assert_eq!(two.bar(), two);
        assert_eq!(r.format(&two), "q^-1 + q");
    }

    #[test]
    fn monomial_units() {
        let r = LaurentRing;
        let m = Laurent::single(3, Rational::new(2, 5));
        let mi = r.inv(&m).unwrap();
        assert!(r.is_one(&r.mul(&m, &mi)));
        let two = r.add(&q(), &Laurent::q_pow(-1));
        assert!(r.inv(&two).is_none());
    }
}
