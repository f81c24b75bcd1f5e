//! Fitness evaluation and single-flip delta costs on chain instances.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ascentlab_bench::chain_with_start;

fn bench_evaluate(c: &mut Criterion) {
    let mut group = c.benchmark_group("evaluate");
    for m in [4u32, 8, 16] {
        let (inst, start) = chain_with_start(m);
        group.bench_with_input(BenchmarkId::new("full", m), &m, |b, _| {
            b.iter(|| inst.evaluate(&start).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("flip_delta_sweep", m), &m, |b, _| {
            b.iter(|| {
                let mut acc = 0i64;
                for v in 0..inst.num_vars() {
                    acc = acc.wrapping_add(inst.flip_delta(&start, v).unwrap());
                }
                acc
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_evaluate);
criterion_main!(benches);
