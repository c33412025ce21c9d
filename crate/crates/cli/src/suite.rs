//! The `suite` subcommand: a verification battery over the whole toolkit.
//!
//! Items run in parallel but results print in a fixed order, so output is
//! deterministic regardless of scheduling. Failures of proved results are
//! plain failures; a violated conjecture is reported as a finding — still a
//! nonzero exit, but labelled as mathematics rather than as a bug.

use num_bigint::BigInt;
use rayon::prelude::*;

use qtrunc::combinatorics::{
    count_distinct_odd, count_jmr, count_three_colored, enumerate_overpartitions,
    phi_fiber_analysis,
};
use qtrunc::identities::verify_with_tail_extension;
use qtrunc::inequalities::{crosscheck_conj2, crosscheck_rr};
use qtrunc::partitions::{pf_by_recurrence, pf_crosscheck};
use qtrunc::{family_value, verify, FamilyId, IdentityId, PartitionFunctionId};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Severity {
    /// A failure here means the toolkit is wrong.
    Check,
    /// A failure here is a conjecture counterexample: a finding.
    Conjecture,
}

enum Outcome {
    Pass,
    Fail(String),
}

struct Item {
    name: String,
    severity: Severity,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

fn item(name: impl Into<String>, severity: Severity, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Item {
    Item { name: name.into(), severity, run: Box::new(run) }
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

fn verify_item(id: IdentityId, order: usize) -> Outcome {
    let report = verify(id, order);
    match report.first_mismatch {
        None => Outcome::Pass,
        Some(m) => Outcome::Fail(format!("q^{}: {} != {}", m.power, m.lhs, m.rhs)),
    }
}

fn jmr_pairs(m_max: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for m in 2..=m_max {
        for r in 1..=m / 2 {
            pairs.push((m, r));
        }
    }
    pairs
}

fn battery(order: usize) -> Vec<Item> {
    let mut items: Vec<Item> = Vec::new();

    // Value tables: printed prefixes and dual-route cross-checks.
    let printed: [(PartitionFunctionId, &[i64]); 4] = [
        (PartitionFunctionId::P, &[1, 1, 2, 3, 5, 7, 11]),
        (PartitionFunctionId::Overp, &[1, 2, 4, 8, 14, 24, 40]),
        (PartitionFunctionId::Pod, &[1, 1, 1, 2, 3, 4, 5, 7]),
        (PartitionFunctionId::T3, &[1, 3, 9, 22, 51, 108, 221, 429, 810, 1479]),
    ];
    for (id, expected) in printed {
        items.push(item(format!("table {id:?} reference values"), Severity::Check, move || {
            let table = pf_by_recurrence(id, expected.len() - 1);
            let got: Vec<BigInt> = table.values().to_vec();
            let want: Vec<BigInt> = expected.iter().map(|&v| BigInt::from(v)).collect();
            check(got == want, || format!("got {got:?}"))
        }));
        items.push(item(format!("table {id:?} cross-check n<=500"), Severity::Check, move || {
            let result = pf_crosscheck(id, 500);
            check(result.passed(), || format!("first mismatch at {:?}", result.first_mismatch))
        }));
    }
    items.push(item("table specializations (3,1)=p (2,1)=overp (4,1)=pod", Severity::Check, || {
        for (id, m, r) in [
            (PartitionFunctionId::P, 3, 1),
            (PartitionFunctionId::Overp, 2, 1),
            (PartitionFunctionId::Pod, 4, 1),
        ] {
            let direct = pf_by_recurrence(id, 500);
            let via = pf_by_recurrence(PartitionFunctionId::Jmr { m, r }, 500);
            if direct.values() != via.values() {
                return Outcome::Fail(format!("{id:?} differs from ({m},{r})"));
            }
        }
        Outcome::Pass
    }));

    // Identity battery.
    for id in [
        IdentityId::EulerPent,
        IdentityId::GaussSquare,
        IdentityId::GaussTriangular,
        IdentityId::JacobiCube,
    ] {
        items.push(item(format!("identity {id:?} order {order}"), Severity::Check, move || {
            verify_item(id, order)
        }));
    }
    for (m, r) in jmr_pairs(10) {
        items.push(item(format!("identity jtp_special m={m} r={r} order {order}"), Severity::Check, move || {
            verify_item(IdentityId::JtpSpecial { m, r }, order)
        }));
    }
    for k in 1..=8 {
        for id in [
            IdentityId::AmTruncated { k },
            IdentityId::Thm1 { k },
            IdentityId::Thm3 { k },
            IdentityId::NewOvp { k },
        ] {
            items.push(item(format!("identity {id:?} order {order}"), Severity::Check, move || {
                verify_item(id, order)
            }));
        }
    }
    let mid_order = order.min(200);
    items.push(item(format!("identity agj_gauss n<=12 order {mid_order}"), Severity::Check, move || {
        for n in 0..=12 {
            if let Outcome::Fail(d) = verify_item(IdentityId::AgjGauss { n }, mid_order) {
                return Outcome::Fail(format!("n={n}: {d}"));
            }
        }
        Outcome::Pass
    }));
    items.push(item(format!("identity shanks n<=12 order {mid_order}"), Severity::Check, move || {
        for n in 0..=12 {
            if let Outcome::Fail(d) = verify_item(IdentityId::Shanks { n }, mid_order) {
                return Outcome::Fail(format!("n={n}: {d}"));
            }
        }
        Outcome::Pass
    }));
    items.push(item(format!("identity qbt_special k<=12 order {mid_order}"), Severity::Check, move || {
        for k in 0..=12 {
            if let Outcome::Fail(d) = verify_item(IdentityId::QbtSpecial { k }, mid_order) {
                return Outcome::Fail(format!("k={k}: {d}"));
            }
        }
        Outcome::Pass
    }));
    let agj_order = order.min(60);
    items.push(item(format!("identity agj n<=6 order {agj_order} (bivariate)"), Severity::Check, move || {
        for n in 0..=6 {
            if let Outcome::Fail(d) = verify_item(IdentityId::Agj { n }, agj_order) {
                return Outcome::Fail(format!("n={n}: {d}"));
            }
        }
        Outcome::Pass
    }));
    let lemma_order = order.min(120);
    for lemma in ["lemma_s2", "lemma_s5"] {
        items.push(item(format!("identity {lemma} n<=20 k<=8 order {lemma_order}"), Severity::Check, move || {
            for n in 1..=20 {
                for k in 1..=8 {
                    let id = match lemma {
                        "lemma_s2" => IdentityId::LemmaS2 { n, k },
                        _ => IdentityId::LemmaS5 { n, k },
                    };
                    if let Outcome::Fail(d) = verify_item(id, lemma_order) {
                        return Outcome::Fail(format!("n={n} k={k}: {d}"));
                    }
                }
            }
            Outcome::Pass
        }));
    }
    items.push(item("tail-cutoff extension changes nothing", Severity::Check, move || {
        let tail_order = order.min(120);
        for id in [
            IdentityId::AmTruncated { k: 2 },
            IdentityId::Thm1 { k: 2 },
            IdentityId::Thm3 { k: 2 },
            IdentityId::QbtSpecial { k: 2 },
            IdentityId::NewOvp { k: 2 },
        ] {
            let plain = verify_with_tail_extension(id, tail_order, 0);
            let extended = verify_with_tail_extension(id, tail_order, 3);
            if plain != extended || !plain.passed() {
                return Outcome::Fail(format!("{id:?}"));
            }
        }
        Outcome::Pass
    }));

    // Inequality scans.
    for family in [FamilyId::Am, FamilyId::Cor2, FamilyId::Cor4] {
        items.push(item(format!("scan {family:?} k<=12 n<=1000 (proved)"), Severity::Check, move || {
            let report = qtrunc::scan(family, 12, 1000);
            check(report.passed(), || {
                format!(
                    "{} violations, {} strictness violations",
                    report.violations.len(),
                    report.strictness_violations.len()
                )
            })
        }));
    }
    for (m, r) in jmr_pairs(10) {
        items.push(item(format!("scan conj1 m={m} r={r} k<=8 n<=800"), Severity::Conjecture, move || {
            let report = qtrunc::scan(FamilyId::Conj1 { m, r }, 8, 800);
            check(report.passed(), || {
                format!(
                    "{} sign violations, {} strictness violations (first {:?})",
                    report.violations.len(),
                    report.strictness_violations.len(),
                    report.strictness_violations.first()
                )
            })
        }));
    }
    for (family, k_max, n_max) in [
        (FamilyId::Conj2, 10, 800),
        (FamilyId::Conj3, 10, 800),
        (FamilyId::Rr1, 8, 500),
        (FamilyId::Rr2, 8, 500),
    ] {
        items.push(item(format!("scan {family:?} k<={k_max} n<={n_max}"), Severity::Conjecture, move || {
            let report = qtrunc::scan(family, k_max, n_max);
            check(report.passed(), || {
                format!(
                    "{} sign violations, {} strictness violations",
                    report.violations.len(),
                    report.strictness_violations.len()
                )
            })
        }));
    }

    // Equivalence cross-checks.
    items.push(item("equivalence conj1(3,1)=am conj1(2,1)=conj2 conj1(4,1)=cor4", Severity::Check, || {
        let n_max = 800;
        for (m, r, named) in [
            (3, 1, FamilyId::Am),
            (2, 1, FamilyId::Conj2),
            (4, 1, FamilyId::Cor4),
        ] {
            let general = FamilyId::Conj1 { m, r };
            let table_g = pf_by_recurrence(general.table_id(), n_max);
            let table_n = pf_by_recurrence(named.table_id(), n_max);
            for k in 1..=8 {
                for n in 1..=n_max {
                    if family_value(general, k, n, &table_g) != family_value(named, k, n, &table_n) {
                        return Outcome::Fail(format!("({m},{r}) vs {named:?} at k={k} n={n}"));
                    }
                }
            }
        }
        Outcome::Pass
    }));
    let xorder = order.min(200);
    items.push(item(format!("crosscheck conj2 series bridge k<=5 order {xorder}"), Severity::Check, move || {
        check(crosscheck_conj2(5, xorder), || "sequence mismatch".into())
    }));
    items.push(item(format!("crosscheck rr series bridge k<=5 order {xorder}"), Severity::Check, move || {
        check(
            crosscheck_rr(FamilyId::Rr1, 5, xorder) && crosscheck_rr(FamilyId::Rr2, 5, xorder),
            || "sequence mismatch".into(),
        )
    }));

    // Combinatorial oracle equivalences.
    items.push(item("oracle overpartition counts n<=20", Severity::Check, || {
        let table = pf_by_recurrence(PartitionFunctionId::Overp, 20);
        for n in 0..=20u32 {
            if BigInt::from(enumerate_overpartitions(n).len()) != *table.value(n as usize) {
                return Outcome::Fail(format!("n={n}"));
            }
        }
        Outcome::Pass
    }));
    items.push(item("oracle distinct-odd counts n<=30", Severity::Check, || {
        let table = pf_by_recurrence(PartitionFunctionId::Pod, 30);
        for n in 0..=30u32 {
            if BigInt::from(count_distinct_odd(n)) != *table.value(n as usize) {
                return Outcome::Fail(format!("n={n}"));
            }
        }
        Outcome::Pass
    }));
    items.push(item("oracle restricted-part counts n<=24 m<=7", Severity::Check, || {
        for (m, r) in jmr_pairs(7) {
            let table = pf_by_recurrence(PartitionFunctionId::Jmr { m, r }, 24);
            for n in 0..=24u32 {
                if BigInt::from(count_jmr(n, m, r)) != *table.value(n as usize) {
                    return Outcome::Fail(format!("m={m} r={r} n={n}"));
                }
            }
        }
        Outcome::Pass
    }));
    items.push(item("oracle three-kinds counts n<=16", Severity::Check, || {
        let table = pf_by_recurrence(PartitionFunctionId::T3, 16);
        for n in 0..=16u32 {
            if BigInt::from(count_three_colored(n)) != *table.value(n as usize) {
                return Outcome::Fail(format!("n={n}"));
            }
        }
        Outcome::Pass
    }));
    items.push(item("oracle overpartition map fibers n<=10", Severity::Check, || {
        for n in 1..=10u32 {
            let fibers = phi_fiber_analysis(n);
            if fibers.len() != enumerate_overpartitions(n - 1).len() {
                return Outcome::Fail(format!("not onto at n={n}"));
            }
            if !fibers.values().all(|&s| s == 1 || s == 2) {
                return Outcome::Fail(format!("fiber size out of range at n={n}"));
            }
        }
        Outcome::Pass
    }));

    items
}

/// Run the battery; returns the process exit code.
pub fn run(order: usize) -> u8 {
    let items = battery(order);
    let results: Vec<(usize, Outcome)> = items
        .par_iter()
        .enumerate()
        .map(|(i, item)| (i, (item.run)()))
        .collect();

    let mut failures = 0usize;
    let mut findings = 0usize;
    let mut ordered: Vec<(usize, &Outcome)> = results.iter().map(|(i, o)| (*i, o)).collect();
    ordered.sort_by_key(|&(i, _)| i);
    for (i, outcome) in ordered {
        let item = &items[i];
        match outcome {
            Outcome::Pass => println!("ok      {}", item.name),
            Outcome::Fail(detail) => {
                match item.severity {
                    Severity::Check => {
                        failures += 1;
                        println!("FAIL    {} ({detail})", item.name);
                    }
                    Severity::Conjecture => {
                        findings += 1;
                        println!("FINDING {} ({detail})", item.name);
                    }
                }
            }
        }
    }
    println!(
        "suite: {} items, {} failures, {} conjecture findings",
        items.len(),
        failures,
        findings
    );
    if failures > 0 || findings > 0 {
        1
    } else {
        0
    }
}
