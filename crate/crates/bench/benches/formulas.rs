use autocomplexity::census::limit_s;
use autocomplexity::words::periodic_count;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn formulas(c: &mut Criterion) {
    c.bench_function("periodic_count 0..=50", |b| {
        b.iter(|| {
            for n in 0..=50u32 {
                black_box(periodic_count(n));
            }
        })
    });
    c.bench_function("limit_s 1..=40", |b| {
        b.iter(|| {
            for q in 1..=40 {
                black_box(limit_s(q));
            }
        })
    });
}

criterion_group!(benches, formulas);
criterion_main!(benches);
