use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use acaa_core::algebra::check_acaa;
use acaa_core::cohomology::{run_check, CohomologyCheck};
use acaa_core::enumerate::enumerate_finite_with_jobs;
use acaa_core::free::free_acaa;
use acaa_core::repr::h3_faithfulness_search;
use acaa_core::sampling::Sampler;
use acaa_core::series::{acaa_series, InverseConvention};
use acaa_core::FieldSpec;

fn linalg(c: &mut Criterion) {
    let q = FieldSpec::Rationals;
    let m = Sampler::new(1).matrix(q, 12, 12);
    c.bench_function("rank 12x12 over Q", |b| b.iter(|| black_box(&m).rank()));
    let p = FieldSpec::prime(7).unwrap();
    let m = Sampler::new(1).matrix(p, 40, 40);
    c.bench_function("rank 40x40 over F7", |b| b.iter(|| black_box(&m).rank()));
}

fn identities(c: &mut Criterion) {
    let f = free_acaa(5).unwrap();
    c.bench_function("check_acaa free(5)", |b| {
        b.iter(|| check_acaa(black_box(f.algebra())).unwrap())
    });
    let f3 = free_acaa(3).unwrap();
    c.bench_function("d2.d1 free(3), 5 samples", |b| {
        b.iter(|| run_check(f3.algebra(), None, CohomologyCheck::D2D1, 5, 0).unwrap())
    });
}

fn series(c: &mut Criterion) {
    let g = acaa_series(20);
    c.bench_function("inverse of g_Acaa to order 20", |b| {
        b.iter(|| {
            black_box(&g)
                .compositional_inverse(InverseConvention::Direct)
                .unwrap()
        })
    });
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive");
    group.sample_size(10);
    group.bench_function("enumerate dim 3 over F3", |b| {
        b.iter(|| enumerate_finite_with_jobs(3, 3, 1).unwrap())
    });
    group.bench_function("h3 search over F3", |b| {
        b.iter(|| h3_faithfulness_search(3, 3, 1).unwrap())
    });
    group.finish();
}

criterion_group!(benches, linalg, identities, series, searches);
criterion_main!(benches);
