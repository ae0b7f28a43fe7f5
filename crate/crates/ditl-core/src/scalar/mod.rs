//! Exact scalar rings: rationals, Laurent polynomials in `q`, prime fields.
//!
//! Rings are passed as values so that prime fields with runtime moduli fit the
//! same interface as the zero-sized rational and Laurent rings. Every
//! operation is exact; nothing here rounds.

mod fp;
mod laurent;
mod rational;

pub use fp::{FpElem, PrimeField};
pub use laurent::{Laurent, LaurentRing};
pub use rational::{Rational, RationalField};

use crate::error::Error;
use alloc::string::String;
use core::fmt::Debug;

/// A commutative ring with exact arithmetic, passed by value.
///
/// `inv` returns `None` for non-units; fields return `Some` for every nonzero
/// element, while Laurent polynomials invert only monomials. Elimination
/// routines surface a non-invertible pivot as [`Error::UnsupportedRing`].
pub trait Ring: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Canonical text form, see the serialization contract of each ring.
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem, Error>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
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
        acc
    }

    /// Division by a unit; `None` when `b` is not invertible.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}
