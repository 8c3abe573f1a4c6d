use criterion::{black_box, criterion_group, criterion_main, Criterion};

use wreath_bench::pairs_up_to;
use wreath_core::charsum::{mixed_e_sum, mixed_e_sum_via_d, nekrasov_factor};
use wreath_core::partition::Partition;
use wreath_core::suites::{
    elliptic_sum_side, no_modular_product_side_exact, no_modular_sum_side_exact, trace_lhs, PochhammerReading,
    TraceCase,
};

fn nekrasov(c: &mut Criterion) {
    let pairs = pairs_up_to(4);
    c.bench_function("nekrasov factors |λ|,|μ|≤4 r=3", |b| {
        b.iter(|| {
            for (l, m) in &pairs {
                black_box(nekrasov_factor(l, m, 3).unwrap());
            }
        })
    });
    let mut g = c.benchmark_group("character sums |λ|,|μ|≤3 r=2");
    let pairs = pairs_up_to(3);
    g.bench_function("direct", |b| {
        b.iter(|| {
            pairs
                .iter()
                .for_each(|(l, m)| drop(black_box(mixed_e_sum(l, m, 2).unwrap())))
        })
    });
    g.bench_function("via D", |b| {
        b.iter(|| {
            pairs
                .iter()
                .for_each(|(l, m)| drop(black_box(mixed_e_sum_via_d(l, m, 2).unwrap())))
        })
    });
    g.finish();
}

fn modular_no(c: &mut Criterion) {
    let mut g = c.benchmark_group("modular NO r=3 T^2");
    g.sample_size(10);
    g.bench_function("sum side", |b| {
        b.iter(|| no_modular_sum_side_exact(&Partition::from_slice(&[1]), 3, 2).unwrap())
    });
    g.bench_function("product side", |b| {
        b.iter(|| no_modular_product_side_exact(3, 2, PochhammerReading::MultiIndex).unwrap())
    });
    g.bench_function("elliptic sum p^2", |b| {
        b.iter(|| elliptic_sum_side(&Partition::empty(), 3, 1, 2).unwrap())
    });
    g.finish();
}

fn trace(c: &mut Criterion) {
    let case = TraceCase::ext_operator(3).unwrap();
    let mut g = c.benchmark_group("trace");
    g.sample_size(10);
    g.bench_function("W(u) r=3 degree≤2", |b| {
        b.iter(|| trace_lhs(3, &case.a, &case.b, 2).unwrap())
    });
    g.finish();
}

criterion_group!(benches, nekrasov, modular_no, trace);
criterion_main!(benches);
