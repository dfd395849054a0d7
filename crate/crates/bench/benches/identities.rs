use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ellsurf_core::octahedral::molien_series;
use ellsurf_core::pencil::{eval_section, theorem_residuals};
use ellsurf_core::verify::{lattice_sweep, run, Suite};
use ellsurf_core::weierstrass::fiber_configuration;
use ellsurf_core::{FieldElem, Group};

fn elem(s: &str) -> FieldElem {
    s.parse().unwrap()
}

fn field(c: &mut Criterion) {
    let x = elem("3/7 + 2*i - 5/3*r2 + 1/2*i*r2");
    let y = elem("-1 + i*r2");
    c.bench_function("field mul", |b| b.iter(|| black_box(&x) * black_box(&y)));
    c.bench_function("field inv", |b| b.iter(|| black_box(&x).inv()));
}

fn fibers(c: &mut Criterion) {
    let (alpha, beta) = (elem("1 + i"), elem("3"));
    c.bench_function("fiber configuration", |b| {
        b.iter(|| fiber_configuration(black_box(&alpha), black_box(&beta)).unwrap())
    });
    let st = [elem("1"), elem("3")];
    c.bench_function("eval section", |b| {
        b.iter(|| eval_section(&alpha, &beta, black_box(&st), 1, 2, 1).unwrap())
    });
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("identities");
    g.sample_size(10);
    g.bench_function("generator residuals", |b| b.iter(|| theorem_residuals().unwrap()));
    g.bench_function("octahedral molien t^48", |b| b.iter(|| molien_series(Group::Octahedral, 48).unwrap()));
    g.bench_function("lattice sweep 3", |b| b.iter(|| lattice_sweep(black_box(3))));
    g.bench_function("invariants suite", |b| b.iter(|| run(Suite::Invariants)));
    g.finish();
}

criterion_group!(benches, field, fibers, suites);
criterion_main!(benches);
