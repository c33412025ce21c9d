//! Coefficient rings for truncated series.
//!
//! Everything in this crate is computed over a commutative ring with exact,
//! decidable equality — no floating point anywhere. Two instances are
//! provided: arbitrary-precision integers ([`num_bigint::BigInt`]) and
//! bivariate integer polynomials ([`crate::bivar::BivarPoly`]) for the
//! identities that carry the free symbols `a` and `b`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact equality.
///
/// `inverse` is partial: it returns `Some` only for units. The series code
/// in this crate only ever inverts constant terms equal to ±1, so integer
/// pipelines stay integer end to end.
pub trait Ring: Clone + Eq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse, if `self` is a unit of the ring.
    fn inverse(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inverse(&self) -> Option<Self> {
        // The only integer units.
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}
