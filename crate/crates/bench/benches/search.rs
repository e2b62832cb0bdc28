use criterion::{black_box, criterion_group, criterion_main, Criterion};
use matchforce::forcing::{phi_exact, phi_greedy};
use matchforce::matchings::count_maximal_matchings;
use matchforce::{SearchLimits, DEFAULT_BUDGET};
use matchforce_bench::instances;

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for (name, g) in instances() {
        group.bench_function(name, |b| {
            b.iter(|| count_maximal_matchings(black_box(&g), DEFAULT_BUDGET).unwrap())
        });
    }
    group.finish();
}

fn bench_greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi_greedy");
    for (name, g) in instances() {
        group.bench_function(name, |b| {
            b.iter(|| phi_greedy(black_box(&g), DEFAULT_BUDGET).unwrap())
        });
    }
    group.finish();
}

fn bench_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi_exact");
    group.sample_size(10);
    for (name, g) in instances() {
        group.bench_function(name, |b| {
            b.iter(|| phi_exact(black_box(&g), SearchLimits::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_greedy, bench_exact);
criterion_main!(benches);
