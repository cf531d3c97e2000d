use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use grif_core::par::Execution;
use grif_core::rootdata::RootSystemSpec;
use grif_core::sweep::{run_check, SweepConfig};
use grif_core::table1;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn config(families: &str, execution: Execution) -> SweepConfig {
    SweepConfig {
        families: families
            .split(',')
            .map(|s| s.parse::<RootSystemSpec>().unwrap())
            .collect(),
        max_weight_coord: 1,
        max_mu_coord: 2,
        include_adjoint: true,
        weyl_samples: 10,
        execution,
        ..SweepConfig::default()
    }
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for families in ["A2,B2,G2", "A3,B3,C3"] {
        for (name, exec) in MODES {
            let cfg = config(families, exec);
            group.bench_with_input(BenchmarkId::new(name, families), &cfg, |b, cfg| {
                b.iter(|| black_box(run_check(cfg).unwrap()))
            });
        }
    }
    group.finish();
}

fn bench_table1(c: &mut Criterion) {
    let mut group = c.benchmark_group("table1");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| black_box(table1::reproduce(exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweep, bench_table1);
criterion_main!(benches);
