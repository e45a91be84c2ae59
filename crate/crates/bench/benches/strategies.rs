use binocont_bench::{strategies_for, DEGREES};
use binocont_core::{identity_report, k_poly, m_power, ExpStrategy};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn continuants(c: &mut Criterion) {
    let mut group = c.benchmark_group("k_poly");
    for n in DEGREES {
        for strategy in strategies_for(n) {
            group.bench_with_input(BenchmarkId::new(strategy.name(), n), &n, |b, &n| {
                b.iter(|| k_poly(black_box(n), strategy).unwrap())
            });
        }
    }
    group.finish();
}

fn matrix_powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("m_power");
    for n in DEGREES {
        group.bench_with_input(BenchmarkId::new("repeated_multiply", n), &n, |b, &n| {
            b.iter(|| m_power(black_box(n), ExpStrategy::RepeatedMultiply).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("square_and_multiply", n), &n, |b, &n| {
            b.iter(|| m_power(black_box(n), ExpStrategy::SquareAndMultiply).unwrap())
        });
    }
    group.finish();
}

fn sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity_report");
    for (n, l) in [(8u32, 8u32), (30, 60), (60, 60)] {
        group.bench_function(format!("n={n},l={l}"), |b| {
            b.iter(|| identity_report(black_box(n), black_box(l)))
        });
    }
    group.finish();
}

criterion_group!(benches, continuants, matrix_powers, sums);
criterion_main!(benches);
