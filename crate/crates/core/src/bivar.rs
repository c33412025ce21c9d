//! Sparse bivariate polynomials over the integers.
//!
//! These are the coefficients used when a series carries the free symbols
//! `a` and `b`. The representation is canonical: zero coefficients are never
//! stored, so equality is plain map equality.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ring::Ring;

/// A polynomial in the symbols `a` and `b` with integer coefficients,
/// stored as a sparse map from `(deg_a, deg_b)` to the coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert((0, 0), c);
        }
        Self { terms }
    }

    /// The monomial `c * a^deg_a * b^deg_b`.
    pub fn monomial(c: BigInt, deg_a: u32, deg_b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert((deg_a, deg_b), c);
        }
        Self { terms }
    }

    /// The symbol `a`.
    pub fn var_a() -> Self {
        Self::monomial(BigInt::from(1), 1, 0)
    }

    /// The symbol `b`.
    pub fn var_b() -> Self {
        Self::monomial(BigInt::from(1), 0, 1)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.terms
    }

    /// Evaluate at integer values of `a` and `b`.
    pub fn eval(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut total = BigInt::from(0);
        for (&(da, db), c) in &self.terms {
            total += c * a.pow(da) * b.pow(db);
        }
        total
    }

    fn insert_term(&mut self, key: (u32, u32), value: BigInt) {
        if !Zero::is_zero(&value) {
            self.terms.insert(key, value);
        }
    }
}

impl Ring for BivarPoly {
    fn zero() -> Self {
        BivarPoly::zero()
    }

    fn one() -> Self {
        BivarPoly::constant(BigInt::from(1))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            let sum = match out.terms.remove(&key) {
                Some(existing) => existing + c,
                None => c.clone(),
            };
            out.insert_term(key, sum);
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(&k, c)| (k, -c)).collect();
        Self { terms }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = BivarPoly::zero();
        for (&(da, db), ca) in &self.terms {
            for (&(ea, eb), cb) in &rhs.terms {
                let key = (da + ea, db + eb);
                let prod = ca * cb;
                let sum = match out.terms.remove(&key) {
                    Some(existing) => existing + prod,
                    None => prod,
                };
                out.insert_term(key, sum);
            }
        }
        out
    }

    fn inverse(&self) -> Option<Self> {
        // Units of Z[a,b] are the constants ±1.
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Ring::inverse(c).map(BivarPoly::constant);
            }
        }
        None
    }

    fn from_i64(v: i64) -> Self {
        BivarPoly::constant(BigInt::from(v))
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(da, db), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if da == 0 && db == 0 {
                write!(f, "{}", c)?;
                continue;
            }
            write!(f, "{}", c)?;
            if da > 0 {
                write!(f, "*a")?;
                if da > 1 {
                    write!(f, "^{}", da)?;
                }
            }
            if db > 0 {
                write!(f, "*b")?;
                if db > 1 {
                    write!(f, "^{}", db)?;
                }
            }
        }
        Ok(())
    }
}
