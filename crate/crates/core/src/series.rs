//! Truncated formal power series in `q`.
//!
//! A [`TruncSeries`] of order `N` stores the coefficients of `q^0 .. q^{N-1}`
//! over a coefficient ring `R`. All arithmetic is exact. Binary operations
//! truncate to the minimum of the operand orders, which matches how truncated
//! identities are compared and avoids a pervasive padding discipline.
//!
//! Storage is dense: the series handled here (partition generating functions
//! and their relatives) have almost no zero coefficients, so a sparse map
//! would only slow the convolutions down. Sparse data lives in
//! [`crate::qobjects::ThetaExpansion`] instead.

use num_bigint::BigInt;

use crate::ring::Ring;

/// A formal power series in `q`, truncated to a fixed order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries<R: Ring> {
    coeffs: Vec<R>,
}

/// Series over arbitrary-precision integers — the workhorse of this crate.
pub type IntSeries = TruncSeries<BigInt>;

impl<R: Ring> TruncSeries<R> {
    /// Build a series from its coefficient list; the order is the length.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be positive");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "series order must be positive");
        Self { coeffs: vec![R::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial `c * q^exponent` (zero series if the exponent is out of range).
    pub fn monomial(c: R, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent < order {
            s.coeffs[exponent] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Coefficientwise sum, truncated to the minimum operand order.
    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..order)
            .map(|i| self.coeffs[i].add(&rhs.coeffs[i]))
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..order)
            .map(|i| self.coeffs[i].sub(&rhs.coeffs[i]))
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(R::neg).collect() }
    }

    pub fn scaled(&self, c: &R) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    /// Cauchy product, truncated to the minimum operand order.
    ///
    /// Schoolbook convolution; zero coefficients are skipped, so multiplying
    /// by a short polynomial embedded in a series costs only O(nnz * N).
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![R::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse to the truncation order.
    ///
    /// Uses the constant-term recurrence
    /// `c_n = -s_0^{-1} * sum_{k=1}^{n} s_k c_{n-k}`.
    /// Panics unless the constant term is a unit of the ring; in this crate
    /// the constant term is always ±1, so integer coefficients stay integers.
    pub fn invert(&self) -> Self {
        let c0_inv = self.coeffs[0]
            .inverse()
            .expect("cannot invert a series whose constant term is not a unit");
        let order = self.order();
        let mut out = vec![R::zero(); order];
        out[0] = c0_inv.clone();
        let neg_c0_inv = c0_inv.neg();
        for n in 1..order {
            let mut acc = R::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(&out[n - k]));
            }
            out[n] = neg_c0_inv.mul(&acc);
        }
        Self { coeffs: out }
    }

    /// Multiply by `q^t`: coefficient of `q^m` becomes the old coefficient of
    /// `q^{m-t}` (zero for `m < t`). The order is unchanged, so the top `t`
    /// coefficients fall off the end.
    pub fn shift(&self, t: usize) -> Self {
        let order = self.order();
        let mut out = vec![R::zero(); order];
        for i in 0..order.saturating_sub(t) {
            out[i + t] = self.coeffs[i].clone();
        }
        Self { coeffs: out }
    }

    /// Substitute `q -> q^m`: coefficient of `q^{m*j}` becomes the old
    /// coefficient of `q^j`, everything else zero. The order is unchanged.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution power must be positive");
        let order = self.order();
        let mut out = vec![R::zero(); order];
        for j in 0..order {
            let e = j.checked_mul(m).expect("exponent overflow");
            if e >= order {
                break;
            }
            out[e] = self.coeffs[j].clone();
        }
        Self { coeffs: out }
    }

    /// A copy truncated to a smaller order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order >= 1 && order <= self.order());
        Self { coeffs: self.coeffs[..order].to_vec() }
    }

    /// In-place multiplication by `(1 - c*q^e)`, `e >= 1`. O(order) ring ops.
    pub fn mul_one_minus_monomial(&mut self, c: &R, e: usize) {
        assert!(e >= 1, "monomial exponent must be positive");
        if c.is_zero() {
            return;
        }
        for m in (e..self.coeffs.len()).rev() {
            let delta = c.mul(&self.coeffs[m - e]);
            self.coeffs[m] = self.coeffs[m].sub(&delta);
        }
    }

    /// In-place division by `(1 - c*q^e)`, `e >= 1`. O(order) ring ops.
    ///
    /// This is exact in any ring because the divisor has constant term 1.
    pub fn div_one_minus_monomial(&mut self, c: &R, e: usize) {
        assert!(e >= 1, "monomial exponent must be positive");
        if c.is_zero() {
            return;
        }
        for m in e..self.coeffs.len() {
            let delta = c.mul(&self.coeffs[m - e]);
            self.coeffs[m] = self.coeffs[m].add(&delta);
        }
    }

    /// Accumulate `q^t * s` into `self`, ignoring anything past the order.
    pub fn add_assign_shifted(&mut self, s: &Self, t: usize) {
        let order = self.coeffs.len();
        for (i, c) in s.coeffs.iter().enumerate() {
            let m = i + t;
            if m >= order {
                break;
            }
            if !c.is_zero() {
                self.coeffs[m] = self.coeffs[m].add(c);
            }
        }
    }

    /// Apply a ring map to every coefficient (e.g. specialize symbols).
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Index of the first coefficient where the two series differ, comparing
    /// up to the smaller of the two orders.
    pub fn first_mismatch(&self, rhs: &Self) -> Option<usize> {
        let order = self.order().min(rhs.order());
        (0..order).find(|&i| self.coeffs[i] != rhs.coeffs[i])
    }
}

impl IntSeries {
    /// Convenience constructor from machine integers (tests, small data).
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&v| BigInt::from(v)).collect())
    }
}
