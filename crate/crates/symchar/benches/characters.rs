//! Character computations, sized so the parallel/sequential split is visible.
//! Compare `cargo bench` against `cargo bench --no-default-features`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use symchar::frobchar;
use symchar::symfunc::character_table;

fn bench_character_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("character_table");
    group.sample_size(10);
    for n in [10u32, 14] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| character_table(n));
        });
    }
    group.finish();
}

fn bench_ch_c(c: &mut Criterion) {
    let mut group = c.benchmark_group("ch_c");
    group.sample_size(10);
    for n in [8u32, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| frobchar::ch_c(n));
        });
    }
    group.finish();
}

fn bench_ch_d(c: &mut Criterion) {
    let mut group = c.benchmark_group("ch_d");
    group.sample_size(10);
    for n in [8u32, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| frobchar::ch_d(n));
        });
    }
    group.finish();
}

fn bench_ch_ot(c: &mut Criterion) {
    let mut group = c.benchmark_group("ch_ot");
    group.sample_size(10);
    for n in [6u32, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| frobchar::ch_ot(n, n as usize + 1));
        });
    }
    group.finish();
}

fn bench_mpy(c: &mut Criterion) {
    let mut group = c.benchmark_group("mpy_check");
    group.sample_size(10);
    group.bench_function("n8", |b| {
        b.iter(|| frobchar::verify::check_mpy(8).unwrap());
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_character_table,
    bench_ch_c,
    bench_ch_d,
    bench_ch_ot,
    bench_mpy
);
criterion_main!(benches);
