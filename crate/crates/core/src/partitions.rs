//! Partition-function value tables, computed by two independent routes.
//!
//! Every counting function here is produced both by the sparse theta
//! recurrence `f(n) = -sum_{i>=1} c_i f(n - e_i)` and by expanding its
//! generating product with the series kernel. The two routes share no code
//! path beyond the coefficient ring, so agreement is a strong correctness
//! signal; [`pf_crosscheck`] reports the first disagreement if any.

use num_bigint::BigInt;

use crate::qobjects::{
    mul_by_poch, poch, theta_cube, theta_jmr, theta_pentagonal, theta_square, theta_triangular,
    PochSpec, Sign, ThetaExpansion,
};
use crate::series::IntSeries;

/// Which counting function a table holds.
///
/// `Jmr { m, r }` requires `1 <= r <= m/2`. The specializations
/// `Jmr(3,1) = P`, `Jmr(2,1) = Overp`, and `Jmr(4,1) = Pod` hold as
/// equalities of value tables and are pinned by tests.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionFunctionId {
    /// Unrestricted partitions `p(n)`.
    P,
    /// Overpartitions `p̄(n)`.
    Overp,
    /// Partitions with distinct odd parts `pod(n)`.
    Pod,
    /// Partitions into parts congruent to `0, ±r (mod m)`, with parts
    /// congruent to `r` counted twice when `m = 2r`.
    Jmr { m: u32, r: u32 },
    /// Partitions into parts of three kinds `t(n)`.
    T3,
}

impl PartitionFunctionId {
    fn validate(&self) {
        if let PartitionFunctionId::Jmr { m, r } = *self {
            assert!(r >= 1 && 2 * r <= m, "Jmr requires 1 <= r <= m/2");
        }
    }

    /// The sparse expansion whose reciprocal is this function's generating
    /// series; it drives the convolution recurrence.
    pub fn theta(&self, order: usize) -> ThetaExpansion {
        self.validate();
        match *self {
            PartitionFunctionId::P => theta_pentagonal(None, order),
            PartitionFunctionId::Overp => theta_square(None, order),
            PartitionFunctionId::Pod => theta_triangular(None, order),
            PartitionFunctionId::Jmr { m, r } => theta_jmr(m, r, order),
            PartitionFunctionId::T3 => theta_cube(order),
        }
    }

    /// The generating product, expanded with the series kernel.
    fn product_series(&self, order: usize) -> IntSeries {
        self.validate();
        match *self {
            PartitionFunctionId::P => poch(&PochSpec::infinite(Sign::Plus, 1, 1), order).invert(),
            PartitionFunctionId::Overp => {
                let inv = poch(&PochSpec::infinite(Sign::Plus, 1, 1), order).invert();
                poch(&PochSpec::infinite(Sign::Minus, 1, 1), order).mul(&inv)
            }
            PartitionFunctionId::Pod => {
                let inv = poch(&PochSpec::infinite(Sign::Plus, 2, 2), order).invert();
                poch(&PochSpec::infinite(Sign::Minus, 1, 2), order).mul(&inv)
            }
            PartitionFunctionId::Jmr { m, r } => {
                let mut prod = poch(&PochSpec::infinite(Sign::Plus, r, m), order);
                mul_by_poch(&mut prod, &PochSpec::infinite(Sign::Plus, m - r, m));
                mul_by_poch(&mut prod, &PochSpec::infinite(Sign::Plus, m, m));
                prod.invert()
            }
            PartitionFunctionId::T3 => {
                let inv = poch(&PochSpec::infinite(Sign::Plus, 1, 1), order).invert();
                inv.mul(&inv).mul(&inv)
            }
        }
    }
}

/// Exact values of one counting function for `0 <= n <= n_max`.
///
/// Tables are immutable once built and are the exchange format between the
/// table builders, the inequality scanners, and the CLI.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValueTable {
    id: PartitionFunctionId,
    values: Vec<BigInt>,
}

impl ValueTable {
    pub fn id(&self) -> PartitionFunctionId {
        self.id
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// The value at `n`; panics if the table does not cover `n`.
    pub fn value(&self, n: usize) -> &BigInt {
        assert!(
            n < self.values.len(),
            "table for {:?} covers n <= {}, asked for {}",
            self.id,
            self.n_max(),
            n
        );
        &self.values[n]
    }

    /// The value at a possibly negative index, with `f(n) = 0` for `n < 0`.
    /// Still panics when `n` exceeds the table's coverage.
    pub fn value_or_zero(&self, n: i64) -> BigInt {
        if n < 0 {
            BigInt::from(0)
        } else {
            self.value(n as usize).clone()
        }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Build a table by the theta-driven convolution recurrence.
pub fn pf_by_recurrence(id: PartitionFunctionId, n_max: usize) -> ValueTable {
    let theta = id.theta(n_max + 1);
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(BigInt::from(1));
    for n in 1..=n_max {
        let mut acc = BigInt::from(0);
        for &(e, c) in &theta.terms()[1..] {
            if e > n {
                break;
            }
            acc += &values[n - e] * c;
        }
        values.push(-acc);
    }
    ValueTable { id, values }
}

/// Build a table by expanding the generating product.
pub fn pf_by_product(id: PartitionFunctionId, n_max: usize) -> ValueTable {
    let series = id.product_series(n_max + 1);
    ValueTable { id, values: series.coeffs().to_vec() }
}

/// Result of comparing the two table-building routes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CrossCheck {
    /// Smallest `n` where the routes disagree, if any.
    pub first_mismatch: Option<usize>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compare recurrence and product expansion over `0..=n_max`.
pub fn pf_crosscheck(id: PartitionFunctionId, n_max: usize) -> CrossCheck {
    let by_recurrence = pf_by_recurrence(id, n_max);
    let by_product = pf_by_product(id, n_max);
    let first_mismatch = (0..=n_max).find(|&n| by_recurrence.value(n) != by_product.value(n));
    CrossCheck { first_mismatch }
}

/// Convenience: recurrence table plus cross-check in one call.
pub fn pf_table_checked(id: PartitionFunctionId, n_max: usize) -> Result<ValueTable, usize> {
    match pf_crosscheck(id, n_max).first_mismatch {
        None => Ok(pf_by_recurrence(id, n_max)),
        Some(n) => Err(n),
    }
}
