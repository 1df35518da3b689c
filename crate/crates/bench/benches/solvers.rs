use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use maxdicut_core::cuts::{dag_cut, run, strong_component_cut};
use maxdicut_core::exact::{max_dicut_bruteforce, max_dicut_exact, DEFAULT_EXACT_CAP};
use maxdicut_core::game::cnu;
use maxdicut_core::generators::{random_bounded_cycle, random_dag, random_digraph, WeightRange};
use maxdicut_core::Algorithm;

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    for n in [12, 16, 20] {
        let d = random_digraph(n, 0.4, WeightRange::integers(1, 9), 1).unwrap();
        group.bench_with_input(BenchmarkId::new("gray_code", n), &d, |b, d| {
            b.iter(|| max_dicut_exact(black_box(d), DEFAULT_EXACT_CAP).unwrap())
        });
        if n <= 16 {
            group.bench_with_input(BenchmarkId::new("bruteforce", n), &d, |b, d| {
                b.iter(|| max_dicut_bruteforce(black_box(d)).unwrap())
            });
        }
    }
    group.finish();
}

fn constructors(c: &mut Criterion) {
    let mut group = c.benchmark_group("constructors");
    let general = random_digraph(
        60,
        0.1,
        WeightRange {
            lo: 1,
            hi: 8,
            denom: 3,
        },
        2,
    )
    .unwrap();
    for alg in [
        Algorithm::PositiveImbalance,
        Algorithm::ThetaBiased,
        Algorithm::Coloring,
        Algorithm::Bipartite,
        Algorithm::Matching,
    ] {
        group.bench_function(alg.id(), |b| {
            b.iter(|| run(alg, black_box(&general)).unwrap())
        });
    }
    let dag = random_dag(40, 0.95, WeightRange::integers(1, 3), 3).unwrap();
    group.bench_function("dag", |b| b.iter(|| dag_cut(black_box(&dag)).unwrap()));
    let cyclic = random_bounded_cycle(60, 4, 4).unwrap();
    group.bench_function("scc", |b| {
        b.iter(|| strong_component_cut(black_box(&cyclic)).unwrap())
    });
    group.finish();
}

fn game(c: &mut Criterion) {
    let mut group = c.benchmark_group("cnu");
    group.sample_size(10);
    for nu in [6, 8, 9] {
        group.bench_with_input(BenchmarkId::from_parameter(nu), &nu, |b, &nu| {
            b.iter(|| cnu(nu).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, exact, constructors, game);
criterion_main!(benches);
