//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every tolerance here is zero — all checks are exact integer equalities.
//! Conjecture scans follow the severity split: a sign violation of a proved
//! family fails the build, while strictness findings on conjectured families
//! are reported as findings (printed below) and pinned to their observed
//! extent, so any change in the mathematics shows up as a test failure.

use num_bigint::BigInt;

use qtrunc::combinatorics::{
    count_distinct_odd, count_jmr, count_three_colored, enumerate_overpartitions, phi,
    phi_fiber_analysis, Overpartition,
};
use qtrunc::identities::{agj_sides, integer_sides, verify_with_tail_extension};
use qtrunc::inequalities::{crosscheck_conj2, crosscheck_rr};
use qtrunc::partitions::{pf_by_product, pf_by_recurrence, pf_crosscheck};
use qtrunc::{family_value, scan, verify, FamilyId, IdentityId, PartitionFunctionId};

struct Criterion {
    number: u32,
    name: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u32, name: &'static str) -> Self {
        Self { number, name, failures: Vec::new() }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) {
        let status = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("acceptance {} ({}): {status}", self.number, self.name);
        assert!(
            self.failures.is_empty(),
            "acceptance {} failed:\n{}",
            self.number,
            self.failures.join("\n")
        );
    }
}

fn big_values(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

#[test]
fn criterion_1_printed_value_tables() {
    let mut c = Criterion::new(1, "printed value tables");
    let cases: [(PartitionFunctionId, &[i64]); 4] = [
        (PartitionFunctionId::P, &[1, 1, 2, 3, 5, 7, 11]),
        (PartitionFunctionId::Overp, &[1, 2, 4, 8, 14, 24, 40]),
        (PartitionFunctionId::Pod, &[1, 1, 1, 2, 3, 4, 5, 7]),
        (PartitionFunctionId::T3, &[1, 3, 9, 22, 51, 108, 221, 429, 810, 1479]),
    ];
    for (id, expected) in cases {
        let n_max = expected.len() - 1;
        let by_recurrence = pf_by_recurrence(id, n_max);
        let by_product = pf_by_product(id, n_max);
        let want = big_values(expected);
        c.require(by_recurrence.values() == want, || {
            format!("{id:?} recurrence route: got {:?}", by_recurrence.values())
        });
        c.require(by_product.values() == want, || {
            format!("{id:?} product route: got {:?}", by_product.values())
        });
    }
    c.finish();
}

#[test]
fn criterion_2_identity_suite() {
    let mut c = Criterion::new(2, "identity suite");

    let mut ids: Vec<(IdentityId, usize)> = vec![
        (IdentityId::EulerPent, 256),
        (IdentityId::GaussSquare, 256),
        (IdentityId::GaussTriangular, 256),
        (IdentityId::JacobiCube, 256),
    ];
    for m in 2..=10 {
        for r in 1..=m / 2 {
            ids.push((IdentityId::JtpSpecial { m, r }, 256));
        }
    }
    for k in 1..=8 {
        ids.push((IdentityId::AmTruncated { k }, 300));
        ids.push((IdentityId::Thm1 { k }, 300));
        ids.push((IdentityId::Thm3 { k }, 300));
        ids.push((IdentityId::NewOvp { k }, 300));
    }
    for n in 0..=20 {
        ids.push((IdentityId::AgjGauss { n }, 200));
        ids.push((IdentityId::Shanks { n }, 200));
        ids.push((IdentityId::QbtSpecial { k: n }, 200));
    }
    for n in 0..=8 {
        ids.push((IdentityId::Agj { n }, 60));
    }
    for n in 1..=40 {
        for k in 1..=12 {
            ids.push((IdentityId::LemmaS2 { n, k }, 120));
            ids.push((IdentityId::LemmaS5 { n, k }, 120));
        }
    }

    use rayon::prelude::*;
    let reports: Vec<_> = ids.par_iter().map(|&(id, order)| verify(id, order)).collect();
    for report in reports {
        c.require(report.passed(), || format!("{:?}: {:?}", report.id, report.first_mismatch));
    }
    c.finish();
}

#[test]
fn criterion_3_proved_inequality_scans() {
    let mut c = Criterion::new(3, "proved inequality scans");
    for family in [FamilyId::Am, FamilyId::Cor2, FamilyId::Cor4] {
        let report = scan(family, 12, 1000);
        c.require(!report.conjectural, || format!("{family:?} misclassified as conjectural"));
        c.require(report.violations.is_empty(), || {
            format!("{family:?}: sign violations {:?}", &report.violations[..1])
        });
        c.require(report.strictness_violations.is_empty(), || {
            format!("{family:?}: strictness violations {:?}", &report.strictness_violations[..1])
        });
    }
    // Pinned strictness thresholds.
    for (family, expected) in [
        (FamilyId::Am, [2u64, 7, 15, 26].as_slice()),
        (FamilyId::Cor2, &[4, 9, 16, 25]),
        (FamilyId::Cor4, &[3, 10, 21, 36]),
    ] {
        for (k, &want) in (1u32..).zip(expected) {
            c.require(family.threshold(k) == Some(want), || {
                format!("{family:?} threshold at k={k}")
            });
        }
    }
    // The computed equality cases below threshold.
    let p = pf_by_recurrence(PartitionFunctionId::P, 10);
    let pod = pf_by_recurrence(PartitionFunctionId::Pod, 10);
    let merca = p.value(5) - p.value(4) - p.value(3) + p.value(0);
    c.require(merca == BigInt::from(0), || format!("p(5)-p(4)-p(3)+p(0) = {merca}"));
    let pod_case = pod.value(6) - pod.value(5) - pod.value(3) + pod.value(0);
    c.require(pod_case == BigInt::from(0), || {
        format!("pod(6)-pod(5)-pod(3)+pod(0) = {pod_case}")
    });
    c.require(family_value(FamilyId::Am, 2, 5, &p) == BigInt::from(0), || {
        "normalized truncated-pentagonal value at k=2, n=5".into()
    });
    c.require(family_value(FamilyId::Cor4, 2, 6, &pod) == BigInt::from(0), || {
        "normalized truncated-triangular value at k=2, n=6".into()
    });
    c.finish();
}

#[test]
fn criterion_4_conjecture_scans() {
    let mut c = Criterion::new(4, "conjecture scans");

    // The wholly clean conjectured families.
    for (family, k_max, n_max) in [
        (FamilyId::Conj2, 10, 800usize),
        (FamilyId::Conj3, 10, 800),
        (FamilyId::Rr1, 8, 500),
        (FamilyId::Rr2, 8, 500),
    ] {
        let report = scan(family, k_max, n_max);
        c.require(report.conjectural, || format!("{family:?} misclassified"));
        c.require(report.passed(), || {
            format!(
                "{family:?}: {} sign, {} strictness violations",
                report.violations.len(),
                report.strictness_violations.len()
            )
        });
    }

    // The generalized family. Nonnegativity must hold on the whole grid.
    // Strict positivity above the printed threshold fails for the sparse
    // part-classes (whenever gcd(m, r) = d > 1 the counting function
    // vanishes off the sublattice d | n, and thin gcd = 1 classes have
    // sporadic small-n equalities); those are conjecture findings, not
    // failures, and their exact extent is pinned below.
    let mut findings: Vec<(u32, u32, usize)> = Vec::new();
    for m in 2..=10u32 {
        for r in 1..=m / 2 {
            let family = FamilyId::Conj1 { m, r };
            let report = scan(family, 8, 800);
            c.require(report.violations.is_empty(), || {
                format!("conj1({m},{r}): sign violations {:?}", &report.violations[..1])
            });
            if !report.strictness_violations.is_empty() {
                c.require(report.conjectural, || format!("conj1({m},{r}) misclassified"));
                findings.push((m, r, report.strictness_violations.len()));
                let (k0, n0) = report.strictness_violations[0];
                println!(
                    "acceptance 4 finding: conj1 m={m} r={r} has {} strictness violations \
                     (first at k={k0}, n={n0})",
                    report.strictness_violations.len()
                );
            }
        }
    }
    // The three dense classical specializations are clean; every other
    // (m, r) class on this grid has strictness findings. Pin the smallest.
    let clean: Vec<(u32, u32)> = [(2, 1), (3, 1), (4, 1)].to_vec();
    for (m, r) in [(2u32, 1u32), (3, 1), (4, 1)] {
        c.require(!findings.iter().any(|&(fm, fr, _)| (fm, fr) == (m, r)), || {
            format!("conj1({m},{r}) unexpectedly has findings")
        });
    }
    c.require(findings.len() == 22, || {
        format!("expected findings in all 22 sparse classes, got {}", findings.len())
    });
    for (m, r, _) in &findings {
        c.require(!clean.contains(&(*m, *r)), || format!("unexpected finding class ({m},{r})"));
    }
    // Structural example: gcd(4, 2) = 2, so every odd n above the
    // threshold is an equality case.
    let f42 = scan(FamilyId::Conj1 { m: 4, r: 2 }, 8, 800);
    c.require(f42.strictness_violations.iter().all(|&(_, n)| n % 2 == 1), || {
        "conj1(4,2) findings must sit at odd n".into()
    });
    // Sporadic example: the (5,1) class has exactly one equality case on
    // this grid, at k = 1, n = 7 (four partitions each of 6 and 7 into
    // parts from {1, 4, 5, 6, ...}).
    let f51 = scan(FamilyId::Conj1 { m: 5, r: 1 }, 8, 800);
    c.require(f51.strictness_violations == vec![(1, 7)], || {
        format!("conj1(5,1) findings: {:?}", f51.strictness_violations)
    });
    c.require(count_jmr(6, 5, 1) == 4 && count_jmr(7, 5, 1) == 4, || {
        "enumeration oracle disagrees with the (5,1) finding".into()
    });
    c.finish();
}

#[test]
fn criterion_5_equivalence_crosschecks() {
    let mut c = Criterion::new(5, "equivalence cross-checks");
    let n_max = 800;
    for (m, r, named) in [
        (3u32, 1u32, FamilyId::Am),
        (2, 1, FamilyId::Conj2),
        (4, 1, FamilyId::Cor4),
    ] {
        let general = FamilyId::Conj1 { m, r };
        let table_g = pf_by_recurrence(general.table_id(), n_max);
        let table_n = pf_by_recurrence(named.table_id(), n_max);
        for k in 1..=8 {
            for n in 1..=n_max {
                let lhs = family_value(general, k, n, &table_g);
                let rhs = family_value(named, k, n, &table_n);
                if lhs != rhs {
                    c.require(false, || format!("conj1({m},{r}) != {named:?} at k={k} n={n}"));
                    break;
                }
            }
        }
    }
    c.require(crosscheck_conj2(5, 200), || "strengthened-difference series bridge".into());
    c.require(crosscheck_rr(FamilyId::Rr1, 5, 200), || "(5,1) partial-sum bridge".into());
    c.require(crosscheck_rr(FamilyId::Rr2, 5, 200), || "(5,2) partial-sum bridge".into());
    c.finish();
}

#[test]
fn criterion_6_combinatorial_oracles() {
    let mut c = Criterion::new(6, "combinatorial oracle equivalence");

    let overp = pf_by_recurrence(PartitionFunctionId::Overp, 25);
    for n in 0..=25u32 {
        let count = enumerate_overpartitions(n).len();
        c.require(BigInt::from(count) == *overp.value(n as usize), || {
            format!("overpartition count at n={n}: {count}")
        });
    }

    let pod = pf_by_recurrence(PartitionFunctionId::Pod, 40);
    for n in 0..=40u32 {
        c.require(BigInt::from(count_distinct_odd(n)) == *pod.value(n as usize), || {
            format!("distinct-odd count at n={n}")
        });
    }

    for m in 2..=7u32 {
        for r in 1..=m / 2 {
            let table = pf_by_recurrence(PartitionFunctionId::Jmr { m, r }, 30);
            for n in 0..=30u32 {
                c.require(BigInt::from(count_jmr(n, m, r)) == *table.value(n as usize), || {
                    format!("restricted-part count at m={m} r={r} n={n}")
                });
            }
        }
    }

    let t3 = pf_by_recurrence(PartitionFunctionId::T3, 20);
    for n in 0..=20u32 {
        c.require(BigInt::from(count_three_colored(n)) == *t3.value(n as usize), || {
            format!("three-kinds count at n={n}")
        });
    }

    // The overpartition map: total, image-valid, fibers in {1, 2}.
    for n in 1..=12u32 {
        let images = enumerate_overpartitions(n - 1);
        let fibers = phi_fiber_analysis(n);
        c.require(fibers.len() == images.len(), || format!("map not onto at n={n}"));
        c.require(fibers.values().all(|&s| s == 1 || s == 2), || {
            format!("fiber size out of range at n={n}")
        });
        c.require(
            fibers.keys().all(|image| image.weight() == (n - 1) as u64),
            || format!("invalid image weight at n={n}"),
        );
        let total: usize = fibers.values().sum();
        c.require(total == enumerate_overpartitions(n).len(), || {
            format!("map not total at n={n}")
        });
    }

    // The worked weight-4 table, all fourteen images, verbatim.
    let op = |parts: &[u32], over: &[u32]| {
        Overpartition::new(parts.to_vec(), over.iter().copied().collect())
    };
    let table = [
        (op(&[4], &[]), op(&[3], &[])),
        (op(&[4], &[4]), op(&[3], &[3])),
        (op(&[3, 1], &[]), op(&[3], &[])),
        (op(&[3, 1], &[1]), op(&[1, 1, 1], &[])),
        (op(&[3, 1], &[3, 1]), op(&[1, 1, 1], &[1])),
        (op(&[3, 1], &[3]), op(&[3], &[3])),
        (op(&[2, 2], &[]), op(&[2, 1], &[])),
        (op(&[2, 2], &[2]), op(&[2, 1], &[2])),
        (op(&[2, 1, 1], &[]), op(&[2, 1], &[])),
        (op(&[2, 1, 1], &[1]), op(&[2, 1], &[1])),
        (op(&[2, 1, 1], &[2, 1]), op(&[2, 1], &[2, 1])),
        (op(&[2, 1, 1], &[2]), op(&[2, 1], &[2])),
        (op(&[1, 1, 1, 1], &[]), op(&[1, 1, 1], &[])),
        (op(&[1, 1, 1, 1], &[1]), op(&[1, 1, 1], &[1])),
    ];
    c.require(table.len() == 14, || "worked table must have 14 rows".into());
    for (input, expected) in &table {
        c.require(&phi(input) == expected, || format!("image of {input:?}"));
    }
    c.finish();
}

#[test]
fn criterion_7_property_suites() {
    use proptest::collection::vec;
    use proptest::prelude::*;
    use proptest::test_runner::{Config, TestRunner};

    use qtrunc::{BivarPoly, IntSeries, Ring};

    let mut c = Criterion::new(7, "property suites");

    let cases = 1000;

    // Ring axioms over the integers, exercised through series arithmetic
    // (coefficientwise, so this covers the scalar ring too).
    let series_strategy = (1usize..=64)
        .prop_flat_map(|order| vec(-1_000_000i64..1_000_000, order..=order))
        .prop_map(|coeffs| IntSeries::from_i64(&coeffs));
    let mut runner = TestRunner::new(Config { cases, ..Config::default() });
    let result = runner.run(
        &(series_strategy.clone(), series_strategy.clone(), series_strategy.clone()),
        |(a, b, u)| {
            let order = a.order().min(b.order()).min(u.order());
            let (a, b, u) = (a.truncated(order), b.truncated(order), u.truncated(order));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&u), a.add(&b.add(&u)));
            prop_assert_eq!(a.mul(&b).mul(&u), a.mul(&b.mul(&u)));
            prop_assert_eq!(a.mul(&b.add(&u)), a.mul(&b).add(&a.mul(&u)));
            prop_assert_eq!(a.add(&IntSeries::zero(order)), a.clone());
            prop_assert_eq!(a.mul(&IntSeries::one(order)), a.clone());
            prop_assert!(a.add(&a.neg()).is_zero());
            Ok(())
        },
    );
    c.require(result.is_ok(), || format!("series ring axioms: {result:?}"));

    // Ring axioms for the bivariate coefficient ring.
    let poly_strategy = vec(((0u32..4, 0u32..4), -100i64..100), 0..5).prop_map(|terms| {
        let mut p = BivarPoly::zero();
        for ((da, db), coeff) in terms {
            p = p.add(&BivarPoly::monomial(BigInt::from(coeff), da, db));
        }
        p
    });
    let mut runner = TestRunner::new(Config { cases, ..Config::default() });
    let result = runner.run(
        &(poly_strategy.clone(), poly_strategy.clone(), poly_strategy.clone()),
        |(a, b, u)| {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&u), a.add(&b.add(&u)));
            prop_assert_eq!(a.mul(&b).mul(&u), a.mul(&b.mul(&u)));
            prop_assert_eq!(a.mul(&b.add(&u)), a.mul(&b).add(&a.mul(&u)));
            prop_assert_eq!(a.add(&BivarPoly::zero()), a.clone());
            prop_assert_eq!(a.mul(&Ring::one()), a.clone());
            prop_assert!(Ring::is_zero(&a.add(&a.neg())));
            Ok(())
        },
    );
    c.require(result.is_ok(), || format!("bivariate ring axioms: {result:?}"));

    // Inversion round-trips for unit constant terms.
    let unit_series = (1usize..=64, proptest::bool::ANY)
        .prop_flat_map(|(order, negate)| {
            vec(-1_000_000i64..1_000_000, order..=order)
                .prop_map(move |mut coeffs| {
                    coeffs[0] = if negate { -1 } else { 1 };
                    IntSeries::from_i64(&coeffs)
                })
        });
    let mut runner = TestRunner::new(Config { cases, ..Config::default() });
    let result = runner.run(&unit_series, |s| {
        prop_assert_eq!(s.mul(&s.invert()), IntSeries::one(s.order()));
        prop_assert_eq!(s.invert().invert(), s);
        Ok(())
    });
    c.require(result.is_ok(), || format!("inversion round-trips: {result:?}"));

    // Tail-cutoff soundness on every infinite-sum verifier.
    for k in 1..=3u32 {
        for order in [40usize, 120] {
            for id in [
                IdentityId::AmTruncated { k },
                IdentityId::Thm1 { k },
                IdentityId::Thm3 { k },
                IdentityId::QbtSpecial { k },
                IdentityId::NewOvp { k },
            ] {
                let plain = verify_with_tail_extension(id, order, 0);
                let extended = verify_with_tail_extension(id, order, 3);
                c.require(plain == extended && plain.passed(), || {
                    format!("tail extension changed {id:?} at order {order}")
                });
            }
        }
    }
    c.finish();
}

#[test]
fn table_cross_checks_at_scale() {
    // Supporting check used by several criteria: the two table routes agree
    // far past the printed prefixes.
    let mut c = Criterion::new(0, "dual-route table agreement");
    for id in [
        PartitionFunctionId::P,
        PartitionFunctionId::Overp,
        PartitionFunctionId::Pod,
        PartitionFunctionId::Jmr { m: 7, r: 2 },
        PartitionFunctionId::T3,
    ] {
        let result = pf_crosscheck(id, 1000);
        c.require(result.passed(), || format!("{id:?}: {:?}", result.first_mismatch));
    }
    c.finish();
}

#[test]
fn agj_specialization_consistency() {
    // Substituting a = -1, b = 1 into the bivariate sides reproduces the
    // integer specialization, for every depth in the acceptance range.
    let mut c = Criterion::new(0, "bivariate-to-integer specialization");
    let (minus_one, one) = (BigInt::from(-1), BigInt::from(1));
    for n in 0..=8u32 {
        let (blhs, brhs) = agj_sides(n, 60);
        let (ilhs, irhs) = integer_sides(IdentityId::AgjGauss { n }, 60);
        let speclhs = blhs.map_coeffs(|p| p.eval(&minus_one, &one));
        let specrhs = brhs.map_coeffs(|p| p.eval(&minus_one, &one));
        c.require(speclhs == ilhs, || format!("left side at depth {n}"));
        c.require(specrhs == irhs, || format!("right side at depth {n}"));
    }
    c.finish();
}

#[test]
fn thm1_correction_series_positivity() {
    // The correction series carries the truncated-square inequality: every
    // coefficient of q^1.. has sign (-1)^k or vanishes, and is strictly
    // signed from exponent (k+1)^2 on.
    let mut c = Criterion::new(0, "correction-series positivity");
    let order = 300;
    for k in 1..=8u32 {
        let (_, rhs) = integer_sides(IdentityId::Thm1 { k }, order);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for m in 1..order {
            let normalized = rhs.coeff(m) * sign;
            c.require(normalized >= BigInt::from(0), || {
                format!("k={k} m={m}: wrong sign {}", rhs.coeff(m))
            });
            if m >= ((k + 1) * (k + 1)) as usize {
                c.require(normalized > BigInt::from(0), || {
                    format!("k={k} m={m}: not strictly signed")
                });
            }
        }
    }
    c.finish();
}
