use bessel_identities::coeffs::{closed_form_cell, coeffs_recurrence};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn bench_row(c: &mut Criterion) {
    let mut group = c.benchmark_group("row_N");
    for n in [4usize, 8, 12, 16] {
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            b.iter(|| coeffs_recurrence(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
            b.iter(|| {
                (0..n)
                    .map(|j| closed_form_cell(black_box(n), j).unwrap())
                    .collect::<Vec<_>>()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_row);
criterion_main!(benches);
