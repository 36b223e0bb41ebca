use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sicgram::{census, enumerate_classes, PUNCTURED_TORUS};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_classes");
    for n in [8, 10, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_classes(n, &[]).unwrap().count())
        });
    }
    g.finish();
}

fn full_census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    for n in [8, 10, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| census(n, &PUNCTURED_TORUS, 1, 3, None).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, enumeration, full_census);
criterion_main!(benches);
