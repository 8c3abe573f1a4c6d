use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_rational::BigRational;

use wreath_bench::{point, rank_deficient};
use wreath_core::linalg::{field_kernel, rational_kernel};
use wreath_core::partition::Partition;
use wreath_core::partition::{core_quotient, partitions_up_to};
use wreath_core::wreath::{solve_h, Normalization};
use wreath_core::{ExactBackend, PointBackend};

fn kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("kernel");
    for n in [20usize, 40] {
        let a = rank_deficient(2 * n, n, n - 2);
        let one = BigRational::from_integer(1.into());
        g.bench_with_input(BenchmarkId::new("fraction-free", n), &a, |b, a| {
            b.iter(|| rational_kernel(black_box(a.clone()), n).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("gauss-jordan", n), &a, |b, a| {
            b.iter(|| field_kernel(black_box(a.clone()), n, &one).unwrap())
        });
    }
    g.finish();
}

fn core_quotients(c: &mut Criterion) {
    let all = partitions_up_to(16);
    c.bench_function("core-quotient |λ|≤16 r=3", |b| {
        b.iter(|| {
            for l in &all {
                black_box(core_quotient(l, 3).unwrap());
            }
        })
    });
}

fn solver(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve-h");
    g.sample_size(10);
    let exact = ExactBackend::new();
    for parts in [&[3u32][..], &[2, 1]] {
        let l = Partition::from_slice(parts);
        g.bench_function(format!("r=1 {} exact", l), |b| {
            b.iter(|| solve_h(&l, 1, &exact, Normalization::Color0).unwrap())
        });
    }
    let pt = PointBackend::new(point(1).unwrap());
    let l = Partition::from_slice(&[4, 1, 1]);
    g.bench_function(format!("r=3 {} point", l), |b| {
        b.iter(|| solve_h(&l, 3, &pt, Normalization::Color0).unwrap())
    });
    g.finish();
}

criterion_group!(benches, kernels, core_quotients, solver);
criterion_main!(benches);
