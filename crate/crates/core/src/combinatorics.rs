//! Brute-force enumeration oracles for the counting functions, plus the
//! weight-decreasing map on overpartitions and its fiber analysis.
//!
//! Nothing here touches the series kernel: these counts come from direct
//! recursive enumeration of the combinatorial objects, which is what makes
//! them useful as independent oracles for the table builders.

use std::collections::{BTreeMap, BTreeSet};

/// An overpartition: a non-increasing list of positive parts in which the
/// first occurrence of each part value may carry an overline.
///
/// Canonical encoding: the parts, plus the set of values that are overlined.
/// Attaching the flag to a value (rather than a position) makes equality,
/// hashing, and ordering trivial, and enforces "at most one overline per
/// value, on the first occurrence" by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Overpartition {
    parts: Vec<u32>,
    overlined: BTreeSet<u32>,
}

impl Overpartition {
    pub fn new(parts: Vec<u32>, overlined: BTreeSet<u32>) -> Self {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be non-increasing");
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        assert!(
            overlined.iter().all(|v| parts.contains(v)),
            "overlined values must occur among the parts"
        );
        Self { parts, overlined }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new(), overlined: BTreeSet::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn overlined(&self) -> &BTreeSet<u32> {
        &self.overlined
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Whether the part at `index` is the overlined occurrence of its value,
    /// i.e. the value is flagged and this is its first (left-most) position.
    fn is_overlined_at(&self, index: usize) -> bool {
        let v = self.parts[index];
        self.overlined.contains(&v) && (index == 0 || self.parts[index - 1] != v)
    }
}

/// All overpartitions of `n`, each exactly once, in a fixed deterministic
/// order (parts in descending-first recursion order, overline subsets in
/// binary order).
pub fn enumerate_overpartitions(n: u32) -> Vec<Overpartition> {
    fn emit(parts: &[u32], out: &mut Vec<Overpartition>) {
        let distinct: Vec<u32> = {
            let mut d: Vec<u32> = parts.to_vec();
            d.dedup();
            d
        };
        for mask in 0u32..(1 << distinct.len()) {
            let overlined: BTreeSet<u32> = distinct
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            out.push(Overpartition::new(parts.to_vec(), overlined));
        }
    }

    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Overpartition>) {
        if remaining == 0 {
            emit(current, out);
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// The weight-decreasing map on overpartitions of `n >= 1`:
///
/// - trailing non-overlined 1: drop it;
/// - trailing part other than `1` or `1̄`: decrement it (the overline, if
///   any, moves with the part);
/// - trailing `1̄`: remove it together with the next-to-last part `w`, and
///   append `w` ones, the first of them overlined exactly when `w` was.
///
/// For the single-part overpartition `(1̄)` the third case has no
/// next-to-last part; the image is the empty overpartition, the reading
/// under which the map is total and every fiber has size 1 or 2 already at
/// `n = 1`. A trailing `1̄` with a next-to-last part equal to 1 cannot occur:
/// the overline would not sit on the value's first occurrence.
pub fn phi(op: &Overpartition) -> Overpartition {
    assert!(!op.is_empty(), "the map is defined on overpartitions of n >= 1");
    let parts = op.parts();
    let k = parts.len();
    let last = parts[k - 1];
    let last_overlined = op.is_overlined_at(k - 1);

    if last == 1 && !last_overlined {
        return Overpartition::new(parts[..k - 1].to_vec(), op.overlined.clone());
    }

    if last >= 2 {
        let mut new_parts = parts.to_vec();
        new_parts[k - 1] = last - 1;
        let mut overlined = op.overlined.clone();
        if last_overlined {
            overlined.remove(&last);
            overlined.insert(last - 1);
        }
        return Overpartition::new(new_parts, overlined);
    }

    // Trailing overlined 1.
    let mut overlined = op.overlined.clone();
    overlined.remove(&1);
    if k == 1 {
        return Overpartition::empty();
    }
    let w = parts[k - 2];
    debug_assert!(w >= 2);
    let w_overlined = op.is_overlined_at(k - 2);
    let mut new_parts = parts[..k - 2].to_vec();
    new_parts.extend(std::iter::repeat(1).take(w as usize));
    if w_overlined {
        // w occurred exactly once (its first occurrence was the removed
        // position), so the flag transfers to the leading appended 1.
        overlined.remove(&w);
        overlined.insert(1);
    }
    Overpartition::new(new_parts, overlined)
}

/// Apply the map to every overpartition of `n` and group by image.
/// Returns image -> fiber size.
pub fn phi_fiber_analysis(n: u32) -> BTreeMap<Overpartition, usize> {
    assert!(n >= 1);
    let mut fibers = BTreeMap::new();
    for op in enumerate_overpartitions(n) {
        *fibers.entry(phi(&op)).or_insert(0) += 1;
    }
    fibers
}

/// Number of partitions of `n` whose odd parts are all distinct, by
/// exhaustive enumeration.
pub fn count_distinct_odd(n: u32) -> u64 {
    fn rec(remaining: u32, max_part: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for p in 1..=max_part.min(remaining) {
            if p % 2 == 1 {
                // An odd part may be used once; continue below it.
                total += rec(remaining - p, p - 1);
            } else {
                total += rec(remaining - p, p);
            }
        }
        total
    }
    rec(n, n)
}

/// Number of colors available for a part value under the `(m, r)` rule:
/// parts congruent to `0, ±r (mod m)` are allowed, and when `m = 2r` the
/// residues `r` and `m - r` coincide so those parts come in two kinds
/// (the generating product carries that factor squared).
fn jmr_kinds(value: u32, m: u32, r: u32) -> u32 {
    let residue = value % m;
    if residue == 0 {
        1
    } else if m == 2 * r {
        if residue == r {
            2
        } else {
            0
        }
    } else if residue == r || residue == m - r {
        1
    } else {
        0
    }
}

/// Counts colored partitions by enumerating multiplicities per species
/// `(value, color)`, species taken in a fixed descending order.
fn count_colored_partitions(n: u32, kinds: impl Fn(u32) -> u32) -> u64 {
    fn rec(remaining: u32, species: &[u32], index: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        if index >= species.len() {
            return 0;
        }
        let value = species[index];
        let mut total = 0;
        let mut used = 0;
        while used <= remaining {
            total += rec(remaining - used, species, index + 1);
            used += value;
        }
        total
    }

    let mut species = Vec::new();
    for value in (1..=n).rev() {
        for _ in 0..kinds(value) {
            species.push(value);
        }
    }
    if n == 0 {
        return 1;
    }
    rec(n, &species, 0)
}

/// Number of partitions of `n` counted by the `(m, r)` rule; requires
/// `1 <= r <= m/2`.
pub fn count_jmr(n: u32, m: u32, r: u32) -> u64 {
    assert!(r >= 1 && 2 * r <= m, "count_jmr requires 1 <= r <= m/2");
    count_colored_partitions(n, |v| jmr_kinds(v, m, r))
}

/// Number of partitions of `n` into parts of three kinds.
pub fn count_three_colored(n: u32) -> u64 {
    count_colored_partitions(n, |_| 3)
}
