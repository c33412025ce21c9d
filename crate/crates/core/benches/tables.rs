//! Table-construction benchmarks.
//!
//! The recurrence route should scale like O(n_max * sqrt(n_max)) big-integer
//! additions for the quadratic-exponent expansions; the product route is the
//! O(n_max^2) baseline it is cross-checked against.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use qtrunc::partitions::{pf_by_product, pf_by_recurrence};
use qtrunc::PartitionFunctionId;

fn bench_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("tables");
    for n_max in [1_000usize, 4_000] {
        group.bench_function(format!("recurrence_p_{n_max}"), |b| {
            b.iter(|| pf_by_recurrence(black_box(PartitionFunctionId::P), black_box(n_max)))
        });
        group.bench_function(format!("recurrence_overp_{n_max}"), |b| {
            b.iter(|| pf_by_recurrence(black_box(PartitionFunctionId::Overp), black_box(n_max)))
        });
    }
    group.sample_size(10);
    group.bench_function("product_p_1000", |b| {
        b.iter(|| pf_by_product(black_box(PartitionFunctionId::P), black_box(1_000)))
    });
    group.finish();
}

criterion_group!(benches, bench_tables);
criterion_main!(benches);
