use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use greedy_balance::{balance_report, greedy_count, greedy_extensions, half_balanced_witness};
use greedy_balance_bench::{random_workload, sp_workload};
use std::hint::black_box;

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("greedy_count");
    for n in [8, 12, 16] {
        let p = random_workload(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| greedy_count(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let p = random_workload(9, 2);
    c.bench_function("greedy_extensions/9", |b| {
        b.iter(|| greedy_extensions(black_box(&p)).unwrap())
    });
}

fn balance(c: &mut Criterion) {
    let p = random_workload(10, 3);
    c.bench_function("balance_report/10", |b| {
        b.iter(|| balance_report(black_box(&p), None).unwrap())
    });
}

fn witness(c: &mut Criterion) {
    let mut group = c.benchmark_group("half_balanced_witness");
    for n in [10, 30, 60] {
        // first seed whose instance is not a chain
        let p = (0..)
            .map(|s| sp_workload(n, s))
            .find(|p| !p.is_chain())
            .unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| half_balanced_witness(black_box(p)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, counting, enumeration, balance, witness);
criterion_main!(benches);
