//! Coefficientwise verification of the identity zoo.
//!
//! Every identity is verified by constructing both sides as truncated
//! series and comparing exactly, coefficient by coefficient, up to the
//! requested order. Integer identities run over big-integer coefficients;
//! the parameterized identity ([`IdentityId::Agj`]) runs over bivariate
//! polynomial coefficients (see [`agj`]).
//!
//! Infinite sums are cut at the first summation index whose term's minimal
//! q-exponent reaches the truncation order. This is sound because every
//! term carries an explicit monomial `q^{min_exp}` whose exponent is
//! strictly increasing in the summation index; the cut can be extended by
//! [`verify_with_tail_extension`] to demonstrate that extra terms change
//! nothing below the order.

mod agj;

pub use agj::agj_sides;

use std::fmt::Display;

use num_bigint::BigInt;

use crate::qobjects::{
    div_by_poch, embed_base, mul_by_poch, poch, theta_cube, theta_jmr, theta_pentagonal,
    theta_square, theta_triangular, PascalRow, PochSpec, Sign,
};
use crate::ring::Ring;
use crate::series::{IntSeries, TruncSeries};

/// Selector for one verifiable identity, with its parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityId {
    /// Pentagonal expansion of the Euler product.
    EulerPent,
    /// Square-exponent expansion of `(q)_inf / (-q)_inf`.
    GaussSquare,
    /// Triangular-exponent expansion of `(q^2;q^2)_inf / (-q;q^2)_inf`.
    GaussTriangular,
    /// Truncated pentagonal expansion with its series correction term.
    AmTruncated { k: u32 },
    /// Truncated square expansion against the overpartition series.
    Thm1 { k: u32 },
    /// Truncated triangular expansion against the distinct-odd-parts series.
    Thm3 { k: u32 },
    /// Parameterized finite summation with free symbols `a` and `b`.
    Agj { n: u32 },
    /// Its integer specialization at `a = -1`, `b = 1`.
    AgjGauss { n: u32 },
    /// The q-binomial-theorem expansion step used inside the truncations.
    QbtSpecial { k: u32 },
    /// Finite triangular-number summation in base `q^2`.
    Shanks { n: u32 },
    /// Triple-product expansion for the `(m, r)` family.
    JtpSpecial { m: u32, r: u32 },
    /// Cube of the Euler product as an alternating odd-weight series.
    JacobiCube,
    /// Partial-sum lemma for the square-expansion kernel.
    LemmaS2 { n: u32, k: u32 },
    /// Partial-sum lemma for the triangular-expansion kernel (base `q^2`).
    LemmaS5 { n: u32, k: u32 },
    /// Generating-series form of the strengthened overpartition difference.
    NewOvp { k: u32 },
}

impl IdentityId {
    fn validate(&self) {
        match *self {
            IdentityId::AmTruncated { k }
            | IdentityId::Thm1 { k }
            | IdentityId::Thm3 { k }
            | IdentityId::NewOvp { k } => assert!(k >= 1, "{self:?} requires k >= 1"),
            IdentityId::JtpSpecial { m, r } => {
                assert!(r >= 1 && 2 * r <= m, "{self:?} requires 1 <= r <= m/2")
            }
            IdentityId::LemmaS2 { n, .. } | IdentityId::LemmaS5 { n, .. } => {
                assert!(n >= 1, "{self:?} requires n >= 1")
            }
            _ => {}
        }
        if let IdentityId::LemmaS5 { k, .. } = *self {
            assert!(k >= 1, "{self:?} requires k >= 1");
        }
    }
}

/// First coefficient where the two sides differ, rendered for reporting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub power: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification: pass exactly when `first_mismatch` is absent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub order: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn compare<R: Ring + Display>(
    id: IdentityId,
    order: usize,
    lhs: &TruncSeries<R>,
    rhs: &TruncSeries<R>,
) -> IdentityReport {
    let first_mismatch = lhs.first_mismatch(rhs).map(|power| Mismatch {
        power,
        lhs: lhs.coeff(power).to_string(),
        rhs: rhs.coeff(power).to_string(),
    });
    IdentityReport { id, order, first_mismatch }
}

/// Verify one identity to the given truncation order.
pub fn verify(id: IdentityId, order: usize) -> IdentityReport {
    verify_with_tail_extension(id, order, 0)
}

/// Like [`verify`], but every infinite sum keeps `extra` additional terms
/// past its cutoff index. Used to demonstrate tail-cutoff soundness: any
/// `extra` must produce the identical report.
pub fn verify_with_tail_extension(id: IdentityId, order: usize, extra: usize) -> IdentityReport {
    assert!(order >= 1);
    id.validate();
    if let IdentityId::Agj { n } = id {
        let (lhs, rhs) = agj::agj_sides(n, order);
        return compare(id, order, &lhs, &rhs);
    }
    let (lhs, rhs) = integer_sides_with_tail(id, order, extra);
    compare(id, order, &lhs, &rhs)
}

/// Both sides of an integer identity as series. Panics for the
/// parameterized identity, whose sides live over the bivariate ring
/// (use [`agj_sides`] for those).
pub fn integer_sides(id: IdentityId, order: usize) -> (IntSeries, IntSeries) {
    id.validate();
    integer_sides_with_tail(id, order, 0)
}

fn integer_sides_with_tail(id: IdentityId, order: usize, extra: usize) -> (IntSeries, IntSeries) {
    match id {
        IdentityId::EulerPent => (
            theta_pentagonal(None, order).to_series(order),
            poch(&PochSpec::infinite(Sign::Plus, 1, 1), order),
        ),
        IdentityId::GaussSquare => {
            let mut rhs = poch(&PochSpec::infinite(Sign::Plus, 1, 1), order);
            div_by_poch(&mut rhs, &PochSpec::infinite(Sign::Minus, 1, 1));
            (theta_square(None, order).to_series(order), rhs)
        }
        IdentityId::GaussTriangular => {
            let mut rhs = poch(&PochSpec::infinite(Sign::Plus, 2, 2), order);
            div_by_poch(&mut rhs, &PochSpec::infinite(Sign::Minus, 1, 2));
            (theta_triangular(None, order).to_series(order), rhs)
        }
        IdentityId::JtpSpecial { m, r } => {
            let mut rhs = poch(&PochSpec::infinite(Sign::Plus, r, m), order);
            mul_by_poch(&mut rhs, &PochSpec::infinite(Sign::Plus, m - r, m));
            mul_by_poch(&mut rhs, &PochSpec::infinite(Sign::Plus, m, m));
            (theta_jmr(m, r, order).to_series(order), rhs)
        }
        IdentityId::JacobiCube => {
            let e = poch(&PochSpec::infinite(Sign::Plus, 1, 1), order);
            (theta_cube(order).to_series(order), e.mul(&e).mul(&e))
        }
        IdentityId::AmTruncated { k } => sides_am_truncated(k, order, extra),
        IdentityId::Thm1 { k } => sides_thm1(k, order, extra),
        IdentityId::Thm3 { k } => sides_thm3(k, order, extra),
        IdentityId::AgjGauss { n } => sides_agj_gauss(n, order),
        IdentityId::QbtSpecial { k } => sides_qbt_special(k, order, extra),
        IdentityId::Shanks { n } => sides_shanks(n, order),
        IdentityId::LemmaS2 { n, k } => sides_lemma_s2(n, k, order),
        IdentityId::LemmaS5 { n, k } => sides_lemma_s5(n, k, order),
        IdentityId::NewOvp { k } => sides_newovp(k, order, extra),
        IdentityId::Agj { .. } => {
            panic!("the parameterized identity has bivariate sides; use agj_sides")
        }
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn parity_sign(j: u64) -> i64 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Decide whether the term whose minimal q-exponent is `min_exp` still
/// matters, honouring the tail extension budget.
struct TailCutoff {
    order: usize,
    extra_left: usize,
}

impl TailCutoff {
    fn new(order: usize, extra: usize) -> Self {
        Self { order, extra_left: extra }
    }

    /// Returns `None` to stop the summation, `Some(len)` with the useful
    /// term length otherwise (zero length for pure extension terms).
    fn term_len(&mut self, min_exp: usize) -> Option<usize> {
        if min_exp < self.order {
            Some(self.order - min_exp)
        } else if self.extra_left > 0 {
            self.extra_left -= 1;
            Some(0)
        } else {
            None
        }
    }
}

/// Truncated pentagonal partial sum with its correction series:
/// `(1/(q)_inf) * sum_{j<k} (-1)^j q^{j(3j+1)/2} (1 - q^{2j+1})`
/// `= 1 + (-1)^{k-1} sum_{n>=k} q^{(k+1)n + k(k-1)/2} / (q)_n * [n-1, k-1]`.
fn sides_am_truncated(k: u32, order: usize, extra: usize) -> (IntSeries, IntSeries) {
    let k = k as u64;

    let mut lhs = IntSeries::zero(order);
    for j in 0..k {
        let c = parity_sign(j);
        let e1 = (j * (3 * j + 1) / 2) as usize;
        let e2 = ((j + 1) * (3 * j + 2) / 2) as usize;
        if e1 < order {
            lhs.add_assign_shifted(&IntSeries::constant(big(c), 1), e1);
        }
        if e2 < order {
            lhs.add_assign_shifted(&IntSeries::constant(big(-c), 1), e2);
        }
    }
    div_by_poch(&mut lhs, &PochSpec::infinite(Sign::Plus, 1, 1));

    let mut rhs = IntSeries::one(order);
    let sign = parity_sign(k - 1);
    let binom_offset = k * (k - 1) / 2;
    // 1/(q)_n, starting at n = k.
    let mut inv_q = IntSeries::one(order);
    for t in 1..=k as usize {
        inv_q.div_one_minus_monomial(&big(1), t);
    }
    // [n-1 choose k-1], starting at n - 1 = k - 1.
    let mut row = PascalRow::new((k - 1) as usize, order);
    while row.m() < k as i64 - 1 {
        row.advance();
    }
    let mut cutoff = TailCutoff::new(order, extra);
    let mut n = k;
    loop {
        let min_exp = ((k + 1) * n + binom_offset) as usize;
        let Some(len) = cutoff.term_len(min_exp) else { break };
        if len > 0 {
            let term = inv_q.truncated(len).mul(row.get((k - 1) as usize));
            let term = if sign < 0 { term.neg() } else { term };
            rhs.add_assign_shifted(&term, min_exp);
        }
        n += 1;
        inv_q.div_one_minus_monomial(&big(1), n as usize);
        row.advance();
    }
    (lhs, rhs)
}

/// Truncated square expansion times the overpartition series:
/// `((-q)_inf/(q)_inf) (1 + 2 sum_{j<=k} (-1)^j q^{j^2})`
/// `= 1 + (-1)^k sum_{n>k} (-q)_k (-1)_{n-k} q^{(k+1)n} / (q)_n * [n-1, k]`.
fn sides_thm1(k: u32, order: usize, extra: usize) -> (IntSeries, IntSeries) {
    let mut lhs = poch(&PochSpec::infinite(Sign::Minus, 1, 1), order);
    div_by_poch(&mut lhs, &PochSpec::infinite(Sign::Plus, 1, 1));
    lhs = lhs.mul(&theta_square(Some(k), order).to_series(order));

    let k = k as u64;
    let mut rhs = IntSeries::one(order);
    let sign = parity_sign(k);
    // (-q)_k / (q)_n, starting at n = k + 1.
    let mut u = poch(&PochSpec::finite(Sign::Minus, 1, 1, k as u32), order);
    for t in 1..=(k + 1) as usize {
        u.div_one_minus_monomial(&big(1), t);
    }
    // (-1; q)_{n-k}, starting at n - k = 1.
    let mut m1 = IntSeries::constant(big(2), order);
    // [n-1 choose k], starting at n - 1 = k.
    let mut row = PascalRow::new(k as usize, order);
    while row.m() < k as i64 {
        row.advance();
    }
    let mut cutoff = TailCutoff::new(order, extra);
    let mut n = k + 1;
    loop {
        let min_exp = ((k + 1) * n) as usize;
        let Some(len) = cutoff.term_len(min_exp) else { break };
        if len > 0 {
            let term = u.truncated(len).mul(&m1).mul(row.get(k as usize));
            let term = if sign < 0 { term.neg() } else { term };
            rhs.add_assign_shifted(&term, min_exp);
        }
        n += 1;
        u.div_one_minus_monomial(&big(1), n as usize);
        m1.mul_one_minus_monomial(&big(-1), (n - 1 - k) as usize);
        row.advance();
    }
    (lhs, rhs)
}

/// Truncated triangular expansion times the distinct-odd-parts series:
/// `((-q;q^2)_inf/(q^2;q^2)_inf) sum_{j<k} (-1)^j q^{j(2j+1)} (1 - q^{2j+1})`
/// `= 1 + (-1)^{k-1} sum_{n>=k} (-q;q^2)_k (-q;q^2)_{n-k} q^{2(k+1)n-k}`
/// `  / (q^2;q^2)_n * [n-1, k-1] in base q^2`.
fn sides_thm3(k: u32, order: usize, extra: usize) -> (IntSeries, IntSeries) {
    let mut lhs = poch(&PochSpec::infinite(Sign::Minus, 1, 2), order);
    div_by_poch(&mut lhs, &PochSpec::infinite(Sign::Plus, 2, 2));
    lhs = lhs.mul(&theta_triangular(Some(k), order).to_series(order));

    let k = k as u64;
    let mut rhs = IntSeries::one(order);
    let sign = parity_sign(k - 1);
    // (-q;q^2)_k / (q^2;q^2)_n, starting at n = k.
    let mut u = poch(&PochSpec::finite(Sign::Minus, 1, 2, k as u32), order);
    for t in 1..=k as usize {
        u.div_one_minus_monomial(&big(1), 2 * t);
    }
    // (-q;q^2)_{n-k}, starting at n - k = 0.
    let mut m2 = IntSeries::one(order);
    // [n-1 choose k-1] in base q, embedded into q^2 per term.
    let base_order = order.div_ceil(2);
    let mut row = PascalRow::new((k - 1) as usize, base_order);
    while row.m() < k as i64 - 1 {
        row.advance();
    }
    let mut cutoff = TailCutoff::new(order, extra);
    let mut n = k;
    loop {
        let min_exp = (2 * (k + 1) * n - k) as usize;
        let Some(len) = cutoff.term_len(min_exp) else { break };
        if len > 0 {
            let binom = embed_base(row.get((k - 1) as usize), 2, len);
            let term = u.truncated(len).mul(&m2).mul(&binom);
            let term = if sign < 0 { term.neg() } else { term };
            rhs.add_assign_shifted(&term, min_exp);
        }
        n += 1;
        u.div_one_minus_monomial(&big(1), 2 * n as usize);
        m2.mul_one_minus_monomial(&big(-1), (2 * (n - 1 - k) + 1) as usize);
        row.advance();
    }
    (lhs, rhs)
}

/// Integer specialization of the parameterized identity:
/// `1 + 2 sum_{j<=n} (-1)^j q^{j^2}`
/// `= sum_{j=0}^n (-1)^j (-1)_j (q)_n q^{(n+1)j} / ((q)_j (-q)_n)`.
fn sides_agj_gauss(n: u32, order: usize) -> (IntSeries, IntSeries) {
    let lhs = theta_square(Some(n), order).to_series(order);
    let mut rhs = IntSeries::zero(order);
    for j in 0..=n as u64 {
        let e = ((n as u64 + 1) * j) as usize;
        if e >= order {
            continue;
        }
        let len = order - e;
        let mut term = poch(&PochSpec::finite(Sign::Plus, 1, 1, n), len);
        mul_by_poch(&mut term, &PochSpec::finite(Sign::Minus, 0, 1, j as u32));
        div_by_poch(&mut term, &PochSpec::finite(Sign::Plus, 1, 1, j as u32));
        div_by_poch(&mut term, &PochSpec::finite(Sign::Minus, 1, 1, n));
        let term = if parity_sign(j) < 0 { term.neg() } else { term };
        rhs.add_assign_shifted(&term, e);
    }
    (lhs, rhs)
}

/// The q-binomial-theorem step:
/// `sum_{i>=0} (-1)_i q^{(k+1)i} / (q)_i = (-q^{k+1})_inf / (q^{k+1})_inf`.
fn sides_qbt_special(k: u32, order: usize, extra: usize) -> (IntSeries, IntSeries) {
    let k = k as u64;
    let mut lhs = IntSeries::zero(order);
    // (-1;q)_i / (q)_i, starting at i = 0.
    let mut v = IntSeries::one(order);
    let mut cutoff = TailCutoff::new(order, extra);
    let mut i = 0u64;
    loop {
        let min_exp = ((k + 1) * i) as usize;
        let Some(len) = cutoff.term_len(min_exp) else { break };
        if len > 0 {
            lhs.add_assign_shifted(&v.truncated(len), min_exp);
        }
        i += 1;
        if i == 1 {
            v = v.scaled(&big(2));
        } else {
            v.mul_one_minus_monomial(&big(-1), (i - 1) as usize);
        }
        v.div_one_minus_monomial(&big(1), i as usize);
    }

    let mut rhs = poch(&PochSpec::infinite(Sign::Minus, k as u32 + 1, 1), order);
    div_by_poch(&mut rhs, &PochSpec::infinite(Sign::Plus, k as u32 + 1, 1));
    (lhs, rhs)
}

/// Finite triangular-number summation in base `q^2`:
/// `sum_{j<n} q^{j(2j+1)} (1 + q^{2j+1})`
/// `= sum_{j<n} (q;q^2)_j (q^2;q^2)_n q^{j(2n+1)} / ((q^2;q^2)_j (q;q^2)_n)`.
fn sides_shanks(n: u32, order: usize) -> (IntSeries, IntSeries) {
    let n = n as u64;
    let mut lhs = IntSeries::zero(order);
    for j in 0..n {
        let e1 = (j * (2 * j + 1)) as usize;
        let e2 = ((j + 1) * (2 * j + 1)) as usize;
        if e1 < order {
            lhs.add_assign_shifted(&IntSeries::one(1), e1);
        }
        if e2 < order {
            lhs.add_assign_shifted(&IntSeries::one(1), e2);
        }
    }

    let mut rhs = IntSeries::zero(order);
    for j in 0..n {
        let e = (j * (2 * n + 1)) as usize;
        if e >= order {
            break;
        }
        let len = order - e;
        let mut term = poch(&PochSpec::finite(Sign::Plus, 1, 2, j as u32), len);
        mul_by_poch(&mut term, &PochSpec::finite(Sign::Plus, 2, 2, n as u32));
        div_by_poch(&mut term, &PochSpec::finite(Sign::Plus, 2, 2, j as u32));
        div_by_poch(&mut term, &PochSpec::finite(Sign::Plus, 1, 2, n as u32));
        rhs.add_assign_shifted(&term, e);
    }
    (lhs, rhs)
}

/// Partial-sum lemma for the square kernel. For `n >= k + 1`:
/// `sum_{j=0}^{k} (-1)^j (-1)_j (-1)_{n-j} / ((q)_j (q)_{n-j})`
/// `= (-1)^k (-q)_k (-1)_{n-k} / ((1-q^n) (q)_{n-k-1} (q)_k)`;
/// for `1 <= n <= k` the left side collapses to zero (terms with `j > n`
/// vanish by the negative-index convention, and so does the right side).
fn sides_lemma_s2(n: u32, k: u32, order: usize) -> (IntSeries, IntSeries) {
    let mut lhs = IntSeries::zero(order);
    for j in 0..=k.min(n) {
        let mut term = poch(&PochSpec::finite(Sign::Minus, 0, 1, j), order);
        mul_by_poch(&mut term, &PochSpec::finite(Sign::Minus, 0, 1, n - j));
        div_by_poch(&mut term, &PochSpec::finite(Sign::Plus, 1, 1, j));
        div_by_poch(&mut term, &PochSpec::finite(Sign::Plus, 1, 1, n - j));
        let term = if parity_sign(j as u64) < 0 { term.neg() } else { term };
        lhs = lhs.add(&term);
    }

    let rhs = if n >= k + 1 {
        let mut t = poch(&PochSpec::finite(Sign::Minus, 1, 1, k), order);
        mul_by_poch(&mut t, &PochSpec::finite(Sign::Minus, 0, 1, n - k));
        t.div_one_minus_monomial(&big(1), n as usize);
        div_by_poch(&mut t, &PochSpec::finite(Sign::Plus, 1, 1, n - k - 1));
        div_by_poch(&mut t, &PochSpec::finite(Sign::Plus, 1, 1, k));
        if parity_sign(k as u64) < 0 {
            t.neg()
        } else {
            t
        }
    } else {
        IntSeries::zero(order)
    };
    (lhs, rhs)
}

/// The combined object `q^i * (-q^{-1}; q^2)_i`, equal to the polynomial
/// `prod_{t=0}^{i-1} (q + q^{2t}) = q^{i-1} (1 + q) (-q; q^2)_{i-1}`.
/// Working with this product keeps every intermediate a polynomial in `q`;
/// negative exponents never materialize.
fn odd_shifted_product(i: u32, order: usize) -> IntSeries {
    if i == 0 {
        return IntSeries::one(order);
    }
    let mut s = poch(&PochSpec::finite(Sign::Minus, 1, 2, i - 1), order);
    s.mul_one_minus_monomial(&big(-1), 1);
    s.shift(i as usize - 1)
}

/// Partial-sum lemma for the triangular kernel, in base `q^2`. For `n >= k`:
/// `sum_{j=0}^{k-1} (-1)^j (-q;q^2)_j Q_{n-j} / ((q^2;q^2)_j (q^2;q^2)_{n-j})`
/// `= (-1)^{k-1} (-q;q^2)_k (-q;q^2)_{n-k} q^{n-k}`
/// `  / ((1-q^{2n}) (q^2;q^2)_{n-k} (q^2;q^2)_{k-1})`,
/// where `Q_i` is [`odd_shifted_product`]; for `1 <= n <= k - 1` the left
/// side collapses to zero.
fn sides_lemma_s5(n: u32, k: u32, order: usize) -> (IntSeries, IntSeries) {
    let mut lhs = IntSeries::zero(order);
    for j in 0..k.min(n + 1) {
        let mut term = poch(&PochSpec::finite(Sign::Minus, 1, 2, j), order);
        term = term.mul(&odd_shifted_product(n - j, order));
        div_by_poch(&mut term, &PochSpec::finite(Sign::Plus, 2, 2, j));
        div_by_poch(&mut term, &PochSpec::finite(Sign::Plus, 2, 2, n - j));
        let term = if parity_sign(j as u64) < 0 { term.neg() } else { term };
        lhs = lhs.add(&term);
    }

    let rhs = if n >= k {
        let mut t = poch(&PochSpec::finite(Sign::Minus, 1, 2, k), order);
        mul_by_poch(&mut t, &PochSpec::finite(Sign::Minus, 1, 2, n - k));
        t = t.shift((n - k) as usize);
        t.div_one_minus_monomial(&big(1), 2 * n as usize);
        div_by_poch(&mut t, &PochSpec::finite(Sign::Plus, 2, 2, n - k));
        div_by_poch(&mut t, &PochSpec::finite(Sign::Plus, 2, 2, k - 1));
        if parity_sign(k as u64 - 1) < 0 {
            t.neg()
        } else {
            t
        }
    } else {
        IntSeries::zero(order)
    };
    (lhs, rhs)
}

/// Generating-series form of the strengthened overpartition difference:
/// `(-1)^{k-1} ((-q)_inf/(q)_inf) (1 + (-1)^k q^{k^2} + 2 sum_{j<k} (-1)^j q^{j^2})`
/// `= (-1)^{k-1} + sum_{n>=k} (-q)_{k-1} (-q)_{n-k} q^{kn} / (q)_n * [n-1, k-1]`
/// `  - sum_{n>k} (-q)_k (-q)_{n-k-1} q^{(k+1)n} / (q)_n * [n-1, k]`.
fn sides_newovp(k: u32, order: usize, extra: usize) -> (IntSeries, IntSeries) {
    let k = k as u64;

    let mut base = poch(&PochSpec::infinite(Sign::Minus, 1, 1), order);
    div_by_poch(&mut base, &PochSpec::infinite(Sign::Plus, 1, 1));
    let mut f = IntSeries::zero(order);
    f.add_assign_shifted(&IntSeries::one(1), 0);
    let kk = (k * k) as usize;
    if kk < order {
        f.add_assign_shifted(&IntSeries::constant(big(parity_sign(k)), 1), kk);
    }
    for j in 1..k {
        let e = (j * j) as usize;
        if e < order {
            f.add_assign_shifted(&IntSeries::constant(big(2 * parity_sign(j)), 1), e);
        }
    }
    let lhs = base.mul(&f).scaled(&big(parity_sign(k - 1)));

    let mut rhs = IntSeries::constant(big(parity_sign(k - 1)), order);

    // First sum: n >= k, weight q^{kn}, positive sign.
    {
        let mut u = poch(&PochSpec::finite(Sign::Minus, 1, 1, k as u32 - 1), order);
        for t in 1..=k as usize {
            u.div_one_minus_monomial(&big(1), t);
        }
        let mut m = IntSeries::one(order); // (-q)_{n-k}, n = k
        let mut row = PascalRow::new((k - 1) as usize, order);
        while row.m() < k as i64 - 1 {
            row.advance();
        }
        let mut cutoff = TailCutoff::new(order, extra);
        let mut n = k;
        loop {
            let min_exp = (k * n) as usize;
            let Some(len) = cutoff.term_len(min_exp) else { break };
            if len > 0 {
                let term = u.truncated(len).mul(&m).mul(row.get((k - 1) as usize));
                rhs.add_assign_shifted(&term, min_exp);
            }
            n += 1;
            u.div_one_minus_monomial(&big(1), n as usize);
            m.mul_one_minus_monomial(&big(-1), (n - k) as usize);
            row.advance();
        }
    }

    // Second sum: n >= k + 1, weight q^{(k+1)n}, negative sign.
    {
        let mut u = poch(&PochSpec::finite(Sign::Minus, 1, 1, k as u32), order);
        for t in 1..=(k + 1) as usize {
            u.div_one_minus_monomial(&big(1), t);
        }
        let mut m = IntSeries::one(order); // (-q)_{n-k-1}, n = k + 1
        let mut row = PascalRow::new(k as usize, order);
        while row.m() < k as i64 {
            row.advance();
        }
        let mut cutoff = TailCutoff::new(order, extra);
        let mut n = k + 1;
        loop {
            let min_exp = ((k + 1) * n) as usize;
            let Some(len) = cutoff.term_len(min_exp) else { break };
            if len > 0 {
                let term = u.truncated(len).mul(&m).mul(row.get(k as usize));
                rhs.add_assign_shifted(&term.neg(), min_exp);
            }
            n += 1;
            u.div_one_minus_monomial(&big(1), n as usize);
            m.mul_one_minus_monomial(&big(-1), (n - k - 1) as usize);
            row.advance();
        }
    }

    (lhs, rhs)
}
