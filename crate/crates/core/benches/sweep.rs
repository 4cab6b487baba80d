use argtrans::par::Parallelism;
use argtrans::properties::{run_sweep, SweepConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn claim_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("claim_sweep");
    group.sample_size(10);
    for (label, n_exhaustive, samples) in [("exhaustive_n3", 3, 0), ("random_20_per_cell", 0, 20)] {
        for mode in [Parallelism::Sequential, Parallelism::Parallel] {
            let mut cfg = SweepConfig::new(n_exhaustive, samples, 1);
            cfg.parallelism = mode;
            group.bench_with_input(BenchmarkId::new(label, format!("{mode:?}")), &cfg, |b, cfg| {
                b.iter(|| {
                    let result = run_sweep(cfg).unwrap();
                    assert!(result.passed());
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, claim_sweep);
criterion_main!(benches);
