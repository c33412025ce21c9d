//! The named q-objects: q-shifted factorials, Gaussian binomial
//! coefficients, and the sparse theta-type expansions that drive every
//! convolution recurrence in this crate.

use num_bigint::BigInt;

use crate::series::IntSeries;

/// Sign of the monomial inside a q-shifted factorial: `(±q^t; q^step)_count`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The value of `c` such that each factor is `(1 - c*q^e)`.
    fn factor_coefficient(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Number of factors in a q-shifted factorial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Count {
    Finite(u32),
    Infinite,
}

/// Specification of `(sign * q^shift; q^step)_count`, i.e. the product
/// `prod_i (1 - sign * q^{shift + step*i})` over `i = 0..count-1`.
///
/// An infinite count requires `shift >= 1` so that the factors tend to 1
/// within any truncation order. `shift = 0` with a finite count is legal:
/// it encodes products whose first factor is the constant `1 - sign`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PochSpec {
    pub sign: Sign,
    pub shift: u32,
    pub step: u32,
    pub count: Count,
}

impl PochSpec {
    pub fn new(sign: Sign, shift: u32, step: u32, count: Count) -> Self {
        assert!(step >= 1, "q-shifted factorial step must be positive");
        if matches!(count, Count::Infinite) {
            assert!(shift >= 1, "infinite q-shifted factorial requires shift >= 1");
        }
        Self { sign, shift, step, count }
    }

    pub fn finite(sign: Sign, shift: u32, step: u32, count: u32) -> Self {
        Self::new(sign, shift, step, Count::Finite(count))
    }

    pub fn infinite(sign: Sign, shift: u32, step: u32) -> Self {
        Self::new(sign, shift, step, Count::Infinite)
    }

    /// Exponents of the factors that matter below the given order. For a
    /// finite count, factors with exponent >= order are congruent to 1 and
    /// are skipped (exponent 0 never falls in that class).
    fn factor_exponents(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        let shift = self.shift as usize;
        let step = self.step as usize;
        let limit = match self.count {
            Count::Finite(c) => c as usize,
            Count::Infinite => usize::MAX,
        };
        (0..limit)
            .map(move |i| shift + step * i)
            .take_while(move |&e| e < order)
    }
}

/// Multiply `s` in place by the q-shifted factorial described by `spec`.
pub fn mul_by_poch(s: &mut IntSeries, spec: &PochSpec) {
    let c = BigInt::from(spec.sign.factor_coefficient());
    let order = s.order();
    for e in spec.factor_exponents(order) {
        if e == 0 {
            // The factor is the constant 1 - sign (0 or 2).
            let k = BigInt::from(1 - spec.sign.factor_coefficient());
            *s = s.scaled(&k);
        } else {
            s.mul_one_minus_monomial(&c, e);
        }
    }
}

/// Divide `s` in place by the q-shifted factorial described by `spec`.
///
/// Every factor must have a positive exponent (constant term 1); division
/// by a factor like `(1 + 1)` would leave the integers. Panics otherwise.
pub fn div_by_poch(s: &mut IntSeries, spec: &PochSpec) {
    let c = BigInt::from(spec.sign.factor_coefficient());
    let order = s.order();
    for e in spec.factor_exponents(order) {
        assert!(e > 0, "cannot divide by a q-shifted factorial with a constant factor");
        s.div_one_minus_monomial(&c, e);
    }
}

/// The q-shifted factorial as a truncated series.
pub fn poch(spec: &PochSpec, order: usize) -> IntSeries {
    let mut s = IntSeries::one(order);
    mul_by_poch(&mut s, spec);
    s
}

/// The Gaussian binomial coefficient `[m choose k]` in base `q^base_power`,
/// embedded in a series of the given order.
///
/// Computed by the Pascal-type recurrence
/// `[m, k] = [m-1, k] + q^{m-k} [m-1, k-1]`, so no division ever occurs.
/// Out-of-range arguments (`k < 0`, `m < 0`, or `k > m`) return the zero
/// series, the convention used by every truncated sum in this crate.
pub fn q_binomial(m: i64, k: i64, base_power: u32, order: usize) -> IntSeries {
    assert!(base_power >= 1, "base power must be positive");
    if k < 0 || m < 0 || k > m {
        return IntSeries::zero(order);
    }
    let base = base_power as usize;
    let base_order = order.div_ceil(base);
    let mut row = PascalRow::new(k as usize, base_order);
    while row.m() < m {
        row.advance();
    }
    embed_base(row.get(k as usize), base, order)
}

/// Re-embed a polynomial computed in base `q` into base `q^base`,
/// at the requested order.
pub(crate) fn embed_base(poly: &IntSeries, base: usize, order: usize) -> IntSeries {
    if base == 1 && poly.order() == order {
        return poly.clone();
    }
    let mut out = IntSeries::zero(order);
    for (j, c) in poly.coeffs().iter().enumerate() {
        let e = j * base;
        if e >= order {
            break;
        }
        out.add_assign_shifted(&IntSeries::constant(c.clone(), 1), e);
    }
    out
}

/// A row of the q-Pascal triangle: `[m choose k]` for all `k <= k_max`,
/// truncated to a fixed order. Verifiers step `m` forward one row at a
/// time, which makes a whole family of binomials cost O(m * k_max * order).
///
/// Each instance is confined to its caller, so concurrent verification
/// workers never share state.
pub(crate) struct PascalRow {
    m: i64,
    order: usize,
    row: Vec<IntSeries>,
}

impl PascalRow {
    /// Start at `m = 0`: `[0 choose 0] = 1`, everything else zero.
    pub fn new(k_max: usize, order: usize) -> Self {
        let mut row = vec![IntSeries::zero(order); k_max + 1];
        row[0] = IntSeries::one(order);
        Self { m: 0, order, row }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Step to the next row via `[m, k] = [m-1, k] + q^{m-k} [m-1, k-1]`.
    pub fn advance(&mut self) {
        self.m += 1;
        for k in (1..self.row.len()).rev() {
            let e = (self.m - k as i64) as usize;
            if e < self.order {
                let (lo, hi) = self.row.split_at_mut(k);
                hi[0].add_assign_shifted(&lo[k - 1], e);
            }
        }
    }

    pub fn get(&self, k: usize) -> &IntSeries {
        &self.row[k]
    }
}

/// A sparse signed exponent list `sum_i c_i q^{e_i}` with `e_0 = 0` and
/// `c_0 = 1`, the shape shared by the pentagonal, square, triangular,
/// triple-product, and cubed expansions. The leading 1 makes the
/// convolution recurrence `f(n) = -sum_{i>=1} c_i f(n - e_i)` well-posed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaExpansion {
    terms: Vec<(usize, i64)>,
}

impl ThetaExpansion {
    fn from_parts(mut parts: Vec<(usize, i64)>) -> Self {
        parts.sort_by_key(|&(e, _)| e);
        let mut terms: Vec<(usize, i64)> = Vec::with_capacity(parts.len());
        for (e, c) in parts {
            match terms.last_mut() {
                // Coinciding exponent families merge additively.
                Some(last) if last.0 == e => last.1 += c,
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|&(_, c)| c != 0);
        assert_eq!(terms.first(), Some(&(0, 1)), "theta expansion must start with +q^0");
        Self { terms }
    }

    /// The `(exponent, coefficient)` terms in strictly increasing exponent order.
    pub fn terms(&self) -> &[(usize, i64)] {
        &self.terms
    }

    /// Materialize as a dense series of the given order.
    pub fn to_series(&self, order: usize) -> IntSeries {
        let mut s = IntSeries::zero(order);
        for &(e, c) in &self.terms {
            if e < order {
                s.add_assign_shifted(&IntSeries::constant(BigInt::from(c), 1), e);
            }
        }
        s
    }
}

/// Pentagonal expansion `1 + sum_{j=1..k_limit} (-1)^j (q^{j(3j-1)/2} + q^{j(3j+1)/2})`,
/// keeping exponents below `order`. `None` means no limit on `j`.
pub fn theta_pentagonal(k_limit: Option<u32>, order: usize) -> ThetaExpansion {
    let mut parts = vec![(0usize, 1i64)];
    for j in 1u64.. {
        if k_limit.is_some_and(|k| j > k as u64) {
            break;
        }
        let e1 = (j * (3 * j - 1) / 2) as usize;
        let e2 = (j * (3 * j + 1) / 2) as usize;
        if e1 >= order {
            break;
        }
        let c = if j % 2 == 0 { 1 } else { -1 };
        parts.push((e1, c));
        if e2 < order {
            parts.push((e2, c));
        }
    }
    ThetaExpansion::from_parts(parts)
}

/// Square expansion `1 + 2 sum_{j=1..k_limit} (-1)^j q^{j^2}`.
pub fn theta_square(k_limit: Option<u32>, order: usize) -> ThetaExpansion {
    let mut parts = vec![(0usize, 1i64)];
    for j in 1u64.. {
        if k_limit.is_some_and(|k| j > k as u64) {
            break;
        }
        let e = (j * j) as usize;
        if e >= order {
            break;
        }
        parts.push((e, if j % 2 == 0 { 2 } else { -2 }));
    }
    ThetaExpansion::from_parts(parts)
}

/// Triangular expansion `sum_{j=0..k_limit-1} (-1)^j q^{j(2j+1)} (1 - q^{2j+1})`,
/// i.e. terms at exponents `j(2j+1)` and `(j+1)(2j+1)`.
pub fn theta_triangular(k_limit: Option<u32>, order: usize) -> ThetaExpansion {
    let mut parts = Vec::new();
    for j in 0u64.. {
        if k_limit.is_some_and(|k| j >= k as u64) {
            break;
        }
        let e1 = (j * (2 * j + 1)) as usize;
        let e2 = ((j + 1) * (2 * j + 1)) as usize;
        if e1 >= order {
            break;
        }
        let c = if j % 2 == 0 { 1 } else { -1 };
        parts.push((e1, c));
        if e2 < order {
            parts.push((e2, -c));
        }
    }
    ThetaExpansion::from_parts(parts)
}

/// Triple-product expansion
/// `1 + sum_{j>=1} (-1)^j (q^{j(mj+m-2r)/2} + q^{j(mj-m+2r)/2})` for
/// `1 <= r <= m/2`. When `m = 2r` the two exponent families coincide and the
/// coefficients merge to ±2 (the square expansion is the `m = 2, r = 1` case).
pub fn theta_jmr(m: u32, r: u32, order: usize) -> ThetaExpansion {
    assert!(r >= 1 && 2 * r <= m, "theta_jmr requires 1 <= r <= m/2");
    let (m, r) = (m as u64, r as u64);
    let mut parts = vec![(0usize, 1i64)];
    for j in 1u64.. {
        // Both numerators are even for every j; see the unit tests.
        let plus = j * (m * j + m - 2 * r);
        let minus = j * (m * j - m + 2 * r);
        debug_assert!(plus % 2 == 0 && minus % 2 == 0);
        let e_plus = (plus / 2) as usize;
        let e_minus = (minus / 2) as usize;
        if e_minus >= order {
            break;
        }
        let c = if j % 2 == 0 { 1 } else { -1 };
        parts.push((e_minus, c));
        if e_plus < order {
            parts.push((e_plus, c));
        }
    }
    ThetaExpansion::from_parts(parts)
}

/// Cubed expansion `sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}`.
pub fn theta_cube(order: usize) -> ThetaExpansion {
    let mut parts = Vec::new();
    for j in 0u64.. {
        let e = (j * (j + 1) / 2) as usize;
        if e >= order {
            break;
        }
        let c = (2 * j + 1) as i64;
        parts.push((e, if j % 2 == 0 { c } else { -c }));
    }
    ThetaExpansion::from_parts(parts)
}
