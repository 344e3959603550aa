//! Hot-path benchmarks: subset-enumeration classification, shortest-path
//! metric repair, trace analysis, and campaign throughput.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use fixlab_core::{
    campaign, example_family, gap_condition, generate, metric_closure, npk_min_coefficient, picard,
    rat_int, CampaignConfig, GeneratorConfig, Rat,
};

fn bench_classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("npk_min_coefficient");
    for &(size, n) in &[(6usize, 3usize), (8, 4), (10, 5)] {
        let (space, map) =
            generate(&GeneratorConfig::range(1, size)).expect("generator config is valid");
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{size}p_n{n}")),
            &n,
            |b, &n| b.iter(|| black_box(npk_min_coefficient(&space, &map, n).unwrap())),
        );
    }
    group.finish();
}

fn bench_metric_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("metric_closure");
    for &size in &[8usize, 16, 32] {
        // deterministic symmetric positive matrix, rich in triangle
        // violations, so the repair does real work
        let raw: Vec<Vec<Rat>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        if i == j {
                            rat_int(0)
                        } else {
                            let (a, b) = (i.min(j), i.max(j));
                            rat_int(((a * 31 + b * 17) % 97 + 1) as i64)
                        }
                    })
                    .collect()
            })
            .collect();
        group.bench_with_input(BenchmarkId::from_parameter(size), &raw, |b, raw| {
            b.iter(|| black_box(metric_closure(raw).unwrap()))
        });
    }
    group.finish();
}

fn bench_trace_analysis(c: &mut Criterion) {
    let (space, map) = example_family(12, &rat_int(156)).expect("family builds");
    c.bench_function("picard_trace_with_gap_fit", |b| {
        b.iter(|| {
            let trace = picard(&space, &map, 11, 16).unwrap();
            black_box(gap_condition(&trace.gaps, 4).unwrap())
        })
    });
}

fn bench_campaign(c: &mut Criterion) {
    let cfg = CampaignConfig {
        trials: 200,
        min_size: 3,
        max_size: 6,
        min_n: 2,
        max_n: 4,
        seed: 5,
    };
    let mut group = c.benchmark_group("campaign");
    group.sample_size(10);
    group.bench_function("200_trials", |b| {
        b.iter(|| black_box(campaign(&cfg).unwrap()))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_classification,
    bench_metric_closure,
    bench_trace_analysis,
    bench_campaign
);
criterion_main!(benches);
