use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pmtrop::minors::{gram, trop_principal_minors};
use pmtrop::realization::{membership_check, realize_flag_point};
use pmtrop::subdivision::{characterizations, subdivision_edges, upper_hull_subdivision};
use pmtrop::ScalingVector;
use pmtrop_bench::{flag_input, nonsingular, pd_minors};

fn minors(c: &mut Criterion) {
    let mut g = c.benchmark_group("gram_and_minors");
    for n in [2usize, 3, 4] {
        let b = nonsingular(n, 1);
        g.bench_with_input(BenchmarkId::from_parameter(n), &b, |bch, b| {
            bch.iter(|| trop_principal_minors(&gram(black_box(b)).unwrap()).unwrap())
        });
    }
    g.finish();
}

fn hull(c: &mut Criterion) {
    let mut g = c.benchmark_group("upper_hull");
    for n in [3usize, 4, 5] {
        let f = flag_input(n, 2).1;
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |bch, f| {
            bch.iter(|| subdivision_edges(&upper_hull_subdivision(black_box(f)).unwrap()))
        });
    }
    g.finish();
}

fn predicates(c: &mut Criterion) {
    let mut g = c.benchmark_group("characterizations");
    for n in [3usize, 4] {
        let f = pd_minors(n, 3);
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |bch, f| {
            bch.iter(|| characterizations(black_box(f)).unwrap())
        });
    }
    g.finish();
}

fn realize(c: &mut Criterion) {
    let mut g = c.benchmark_group("realize");
    g.sample_size(20);
    for n in [2usize, 3, 4] {
        let (b, w) = flag_input(n, 4);
        let lambdas = ScalingVector::zeros(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &(b, w), |bch, (b, w)| {
            bch.iter(|| realize_flag_point(black_box(w), b, &lambdas, false, 0).unwrap())
        });
    }
    g.finish();
}

fn membership(c: &mut Criterion) {
    let mut g = c.benchmark_group("membership");
    g.sample_size(20);
    for n in [3usize, 4] {
        let w = flag_input(n, 5).1;
        g.bench_with_input(BenchmarkId::from_parameter(n), &w, |bch, w| {
            bch.iter(|| membership_check(black_box(w), 0).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, minors, hull, predicates, realize, membership);
criterion_main!(benches);
