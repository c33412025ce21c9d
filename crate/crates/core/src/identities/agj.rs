//! The parameterized finite identity with free symbols `a` and `b`,
//! verified over series whose coefficients are bivariate polynomials.
//!
//! Both sides are assembled division-free:
//! - the `j = 0` summand of the left side is taken as exactly 1 (its value
//!   after the `1 - b` cancellation);
//! - `(b)_j / (1 - b)` is the product `(bq; q)_{j-1}`;
//! - `(b/a)_j a^j` is the polynomial product of the factors `(a - b q^i)`,
//!   so no division by `a` ever occurs;
//! - `1/(q)_j` and `1/(aq)_j` are series divisions by factors with constant
//!   term 1, which are exact in any coefficient ring.

use num_bigint::BigInt;

use crate::bivar::BivarPoly;
use crate::series::TruncSeries;

type BSeries = TruncSeries<BivarPoly>;

fn one_poly() -> BivarPoly {
    BivarPoly::constant(BigInt::from(1))
}

/// Multiply by the two-term factor `(a - b*q^e)`; cheap because the factor
/// series has at most two nonzero coefficients.
fn mul_a_minus_bq(s: &BSeries, e: usize) -> BSeries {
    let order = s.order();
    let factor = TruncSeries::monomial(BivarPoly::var_a(), 0, order)
        .sub(&TruncSeries::monomial(BivarPoly::var_b(), e, order));
    factor.mul(s)
}

/// Both sides of the parameterized identity at summation depth `n`,
/// as series in `q` over the polynomial ring in `a` and `b`.
pub fn agj_sides(n: u32, order: usize) -> (BSeries, BSeries) {
    let b = BivarPoly::var_b();
    let a = BivarPoly::var_a();

    // Left side: 1 + sum_{j=1}^{n} (bq;q)_{j-1} (1 - b q^{2j})
    //            prod_{i<j}(a - b q^i) q^{j^2} / ((q)_j (aq)_j).
    let mut lhs = BSeries::one(order);
    // Running value of (bq;q)_{j-1} prod_{i<j}(a - b q^i) / ((q)_j (aq)_j).
    let mut running = BSeries::one(order);
    for j in 1..=n as usize {
        if j >= 2 {
            running.mul_one_minus_monomial(&b, j - 1);
        }
        running = mul_a_minus_bq(&running, j - 1);
        running.div_one_minus_monomial(&one_poly(), j);
        running.div_one_minus_monomial(&a, j);
        let e = j * j;
        if e >= order {
            break;
        }
        let mut term = running.clone();
        term.mul_one_minus_monomial(&b, 2 * j);
        lhs.add_assign_shifted(&term, e);
    }

    // Right side: (bq)_n / (aq)_n * sum_{j=0}^{n} prod_{i<j}(a - b q^i)
    //             q^{(n+1)j} / (q)_j.
    let mut rhs = BSeries::one(order);
    let mut running = BSeries::one(order);
    for j in 1..=n as usize {
        running = mul_a_minus_bq(&running, j - 1);
        running.div_one_minus_monomial(&one_poly(), j);
        let e = (n as usize + 1) * j;
        if e >= order {
            break;
        }
        rhs.add_assign_shifted(&running, e);
    }
    for t in 1..=n as usize {
        rhs.mul_one_minus_monomial(&b, t);
        rhs.div_one_minus_monomial(&a, t);
    }

    (lhs, rhs)
}
