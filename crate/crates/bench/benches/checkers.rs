use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use veelocus::catalog::{a_n2, vee_an_c};
use veelocus::scan::solve_three_vector;
use veelocus::{check_locus, check_vee, check_wdvv, enumerate_planes, Tolerance};

fn locus(c: &mut Criterion) {
    let tol = Tolerance::default();
    let mut group = c.benchmark_group("check_locus");
    for n in [3usize, 4, 5] {
        let cfg = a_n2(n, 2).unwrap();
        group.bench_with_input(BenchmarkId::new("An2_m2", n), &cfg, |b, cfg| {
            b.iter(|| check_locus(black_box(cfg), 0, 0, &tol).unwrap())
        });
    }
    group.finish();
}

fn planes(c: &mut Criterion) {
    let tol = Tolerance::default();
    let cfg = a_n2(6, 1).unwrap();
    c.bench_function("enumerate_planes/An2_n6", |b| b.iter(|| enumerate_planes(black_box(&cfg), &tol)));
}

fn vee_and_wdvv(c: &mut Criterion) {
    let tol = Tolerance::default();
    let mut group = c.benchmark_group("vee_an_c");
    for n in [3usize, 5, 7] {
        let weights: Vec<f64> = (1..=n).map(|i| 0.5 + i as f64 * 0.25).collect();
        let cfg = vee_an_c(&weights).unwrap();
        group.bench_with_input(BenchmarkId::new("check_vee", n), &cfg, |b, cfg| {
            b.iter(|| check_vee(black_box(cfg), &tol).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("check_wdvv", n), &cfg, |b, cfg| {
            b.iter(|| check_wdvv(black_box(cfg), 2, 7, &tol).unwrap())
        });
    }
    group.finish();
}

fn three_vector(c: &mut Criterion) {
    c.bench_function("solve_three_vector/2_1_1", |b| {
        b.iter(|| solve_three_vector(black_box(2), black_box(1), black_box(1)).unwrap())
    });
    c.bench_function("solve_three_vector/3_2_1", |b| {
        b.iter(|| solve_three_vector(black_box(3), black_box(2), black_box(1)).unwrap())
    });
}

criterion_group!(benches, locus, planes, vee_and_wdvv, three_vector);
criterion_main!(benches);
