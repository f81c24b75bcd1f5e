//! Ascent throughput on controlled-doubling chains. The designated ascent
//! takes 10(2^m - 1) flips, so chain length doubles the work per gadget.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use ascentlab::search::{run_ascent, PivotRule, DEFAULT_MAX_STEPS};
use ascentlab_bench::chain_with_start;

fn bench_ascent(c: &mut Criterion) {
    let mut group = c.benchmark_group("ascent");
    for m in [4u32, 8, 12] {
        let (inst, start) = chain_with_start(m);
        let steps = 10 * ((1u64 << m) - 1);
        group.throughput(Throughput::Elements(steps));
        for (rule, tag) in [
            (PivotRule::FirstImprovement, "first"),
            (PivotRule::Steepest, "steepest"),
        ] {
            group.bench_with_input(BenchmarkId::new(tag, m), &m, |b, _| {
                b.iter(|| {
                    run_ascent(&inst, &start, rule, DEFAULT_MAX_STEPS, false).unwrap()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_ascent);
criterion_main!(benches);
