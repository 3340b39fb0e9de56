use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use bdsym_bench::random_table;
use bdsym_core::orbits::{
    anti_orbit_branches, discrete_orbit, system_prefixes, OrbitMode, SchedulePrefix,
};
use bdsym_core::portrait::build_portrait;
use bdsym_core::State;

fn bench_orbits(c: &mut Criterion) {
    let phi = random_table(4, 31);
    let alpha =
        SchedulePrefix::new(4, (0..64).map(|i| State::new(4, i % 16).unwrap()).collect()).unwrap();
    let start = State::zero(4);
    c.bench_function("discrete_orbit 64 steps n=4", |b| {
        b.iter(|| discrete_orbit(black_box(&phi), black_box(&start), black_box(&alpha)))
    });

    let phi2 = random_table(2, 32);
    c.bench_function("system_prefixes forward n=2 K=3", |b| {
        b.iter(|| system_prefixes(black_box(&phi2), 3, OrbitMode::Forward))
    });
    c.bench_function("system_prefixes anti n=2 K=3", |b| {
        b.iter(|| system_prefixes(black_box(&phi2), 3, OrbitMode::Anti))
    });

    let not3 = bdsym_core::TruthTable::negation(3);
    let full = SchedulePrefix::new(3, vec![State::ones(3); 6]).unwrap();
    c.bench_function("anti_orbit_branches negation n=3", |b| {
        b.iter(|| anti_orbit_branches(black_box(&not3), black_box(&State::zero(3)), &full))
    });
}

fn bench_portrait(c: &mut Criterion) {
    let phi = random_table(10, 41);
    c.bench_function("build_portrait n=10", |b| {
        b.iter(|| build_portrait(black_box(&phi)))
    });
    let graph = build_portrait(&random_table(8, 42));
    c.bench_function("render_dot n=8", |b| {
        b.iter(|| black_box(&graph).render_dot())
    });
}

criterion_group!(benches, bench_orbits, bench_portrait);
criterion_main!(benches);
