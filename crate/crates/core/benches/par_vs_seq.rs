//! Parallel vs sequential comparison of the grid-scan and quadrature cores.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cyclemix::mixing::d_ct_quantum;
use cyclemix::quad::{composite_simpson, composite_simpson_seq};
use cyclemix::walk::ct_quantum_amplitude_at;
use cyclemix::{par, sum, CycleSize};

fn bench_d_grid(c: &mut Criterion) {
    let n = CycleSize::new(9).unwrap();
    let points = 2001usize;
    let mut group = c.benchmark_group("d_grid_scan");
    group.sample_size(20);
    group.bench_with_input(BenchmarkId::new("parallel", points), &points, |b, &m| {
        b.iter(|| {
            let v = par::map_indexed(m, |i| d_ct_quantum(n, 0.01 * i as f64).unwrap());
            sum::pairwise_sum(&v)
        })
    });
    group.bench_with_input(BenchmarkId::new("sequential", points), &points, |b, &m| {
        b.iter(|| {
            let v = par::map_indexed_seq(m, |i| d_ct_quantum(n, 0.01 * i as f64).unwrap());
            sum::pairwise_sum(&v)
        })
    });
    group.finish();
}

fn bench_quadrature(c: &mut Criterion) {
    let n = CycleSize::new(31).unwrap();
    let f = move |t: f64| {
        cyclemix::walk::ct_quantum_probability_at(n, 0, t).unwrap()
    };
    let mut group = c.benchmark_group("simpson_time_average");
    group.sample_size(20);
    group.bench_function("parallel", |b| {
        b.iter(|| composite_simpson(f, 0.0, 500.0, 0.05) / 500.0)
    });
    group.bench_function("sequential", |b| {
        b.iter(|| composite_simpson_seq(f, 0.0, 500.0, 0.05) / 500.0)
    });
    group.finish();
}

fn bench_amplitude_vector(c: &mut Criterion) {
    let n = CycleSize::new(4096).unwrap();
    let count = n.get();
    let mut group = c.benchmark_group("amplitude_vector");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| par::map_indexed(count, |site| ct_quantum_amplitude_at(n, site, 12.5).unwrap()))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            par::map_indexed_seq(count, |site| ct_quantum_amplitude_at(n, site, 12.5).unwrap())
        })
    });
    group.finish();
}

criterion_group!(benches, bench_d_grid, bench_quadrature, bench_amplitude_vector);
criterion_main!(benches);
