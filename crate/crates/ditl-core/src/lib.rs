//! Exact-arithmetic diagram calculus for the dicyclic Temperley-Lieb category.
//!
//! The crate has three layers:
//!
//! * exact scalar rings and dense exact linear algebra ([`scalar`], [`matrix`],
//!   [`numbers`], [`bigfloat`]),
//! * the decorated diagram calculus and its linear combinations ([`diagram`],
//!   [`algebra`]),
//! * the matrix functor into tensor powers of the defining two-dimensional
//!   dicyclic representation, Jones-Wenzl type projectors, and the fusion /
//!   character-table oracles ([`functor`], [`projectors`], [`fusion`]).
//!
//! Verification suites report through [`report::VerificationReport`]. All
//! arithmetic is exact; the single place where high-precision fixed-point
//! evaluation appears (the closed cosine dimension formula) rounds to an
//! integer under a guarded tolerance and is cross-checked against the exact
//! walk count.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod bigfloat;
pub mod diagram;
pub mod error;
pub mod functor;
pub mod fusion;
pub mod matrix;
pub mod numbers;
pub mod projectors;
pub mod report;
pub mod scalar;

pub use error::Error;
pub use scalar::{Laurent, LaurentRing, PrimeField, Rational, RationalField, Ring};
