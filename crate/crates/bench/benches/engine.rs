use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use irratio_core::analysis::conjugacy_classes;
use irratio_core::constructions::classical::classical;
use irratio_core::constructions::lie::suzuki;
use irratio_core::{is_irrational, is_pi_irrational, Family, Group};

fn fresh(name: &str) -> Group {
    match name {
        "psl(2,13)" => classical(Family::PSL, 2, 13).unwrap(),
        "sz(8)" => suzuki(8).unwrap(),
        _ => unreachable!(),
    }
}

fn enumerated(name: &str) -> Group {
    let g = fresh(name);
    g.enumeration().unwrap();
    g
}

fn engine(c: &mut Criterion) {
    for name in ["psl(2,13)", "sz(8)"] {
        let mut group = c.benchmark_group(name);
        group.sample_size(10);
        group.bench_function("enumerate", |b| {
            b.iter_batched(|| fresh(name), |g| g.order().unwrap(), BatchSize::PerIteration)
        });
        group.bench_function("classes", |b| {
            b.iter_batched(
                || enumerated(name),
                |g| conjugacy_classes(&g).unwrap().len(),
                BatchSize::PerIteration,
            )
        });
        group.bench_function("2-irrational", |b| {
            b.iter_batched(
                || enumerated(name),
                |g| is_pi_irrational(&g, &[2]).unwrap(),
                BatchSize::PerIteration,
            )
        });
        group.bench_function("irrational", |b| {
            b.iter_batched(
                || enumerated(name),
                |g| is_irrational(&g).unwrap(),
                BatchSize::PerIteration,
            )
        });
        group.finish();
    }
}

criterion_group!(benches, engine);
criterion_main!(benches);
