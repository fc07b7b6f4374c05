use autocomplexity::census::ComplexityVector;
use autocomplexity::complexity;
use autocomplexity_bench::sample_words;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn single_words(c: &mut Criterion) {
    let mut group = c.benchmark_group("complexity");
    for n in [8, 12, 16, 20] {
        let words = sample_words(n, 32, 0x5eed);
        group.bench_with_input(BenchmarkId::from_parameter(n), &words, |b, words| {
            b.iter(|| {
                for w in words {
                    black_box(complexity(w, None).unwrap().complexity);
                }
            })
        });
    }
    group.finish();
}

fn full_vectors(c: &mut Criterion) {
    let mut group = c.benchmark_group("vector");
    group.sample_size(10);
    for n in [8, 10] {
        group.bench_function(BenchmarkId::from_parameter(n), |b| {
            b.iter(|| ComplexityVector::compute(n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, single_words, full_vectors);
criterion_main!(benches);
