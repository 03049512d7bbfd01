//! Sequential vs parallel throughput of the batch engines on the
//! exhaustive four-variable ideal set.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sdepth_core::enumerate::proper_nonzero_ideals;
use sdepth_core::exec::ExecMode;
use sdepth_core::harness::{verify_batch_with, CheckId, RunOptions};
use sdepth_core::ideal::QuotientPresentation;
use sdepth_core::koszul::depth;
use sdepth_core::stanley::sdepth_exact;

fn modes() -> [(&'static str, ExecMode); 2] {
    [
        ("sequential", ExecMode::Sequential),
        ("parallel", ExecMode::Parallel),
    ]
}

fn bench_depth_batch(c: &mut Criterion) {
    let ideals = proper_nonzero_ideals(4);
    let mut group = c.benchmark_group("depth_all_n4");
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                sdepth_core::exec::map_ordered(mode, &ideals, |i| {
                    depth(&QuotientPresentation::quotient_ring(i.clone()).unwrap()).unwrap()
                })
            });
        });
    }
    group.finish();
}

fn bench_sdepth_batch(c: &mut Criterion) {
    let ideals = proper_nonzero_ideals(4);
    let mut group = c.benchmark_group("sdepth_all_n4");
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                sdepth_core::exec::map_ordered(mode, &ideals, |i| {
                    sdepth_exact(&QuotientPresentation::of_ideal(i.clone()).unwrap())
                        .unwrap()
                        .value
                })
            });
        });
    }
    group.finish();
}

fn bench_wc4_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_wc4");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            let opts = RunOptions {
                mode,
                ..RunOptions::default()
            };
            b.iter(|| {
                let report = verify_batch_with(CheckId::Wc4, 4, &opts).unwrap();
                assert!(report.passed());
                report.summary.cases
            });
        });
    }
    group.finish();
}

/// The five-variable sweep is where the fan-out pays for itself.
fn bench_sdepth_batch_n5(c: &mut Criterion) {
    let ideals = proper_nonzero_ideals(5);
    let mut group = c.benchmark_group("sdepth_all_n5");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                sdepth_core::exec::map_ordered(mode, &ideals, |i| {
                    sdepth_exact(&QuotientPresentation::of_ideal(i.clone()).unwrap())
                        .unwrap()
                        .value
                })
            });
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_depth_batch,
    bench_sdepth_batch,
    bench_wc4_check,
    bench_sdepth_batch_n5
);
criterion_main!(benches);
