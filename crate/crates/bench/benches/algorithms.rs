// SPDX-License-Identifier: Apache-2.0

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ecclab_bench::{connected, ktree, path_dag, set_system, strong_digraph, SIZES};
use ecclab_core::approx::{
    approx_min_diameter, approx_min_diameter_dag, approx_min_radius_dag, approx_source_radius, Ratio,
};
use ecclab_core::hardness::{gadget_roundtrip_radius, solve_set_system, Mode};
use ecclab_core::rng::substream;
use ecclab_core::treewidth::tw_eccentricities;
use ecclab_core::{exact_eccentricities, Variant};

fn approx(c: &mut Criterion) {
    let mut group = c.benchmark_group("approx");
    group.sample_size(20);
    for n in SIZES {
        let g = strong_digraph(n, 1);
        group.bench_with_input(BenchmarkId::new("source_radius", n), &g, |b, g| {
            let mut rng = substream(1, "bench");
            b.iter(|| approx_source_radius(g, &mut rng).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("min_diameter_eps_half", n), &g, |b, g| {
            let mut rng = substream(1, "bench");
            b.iter(|| approx_min_diameter(g, Ratio { num: 1, den: 2 }, &mut rng).unwrap())
        });
        let d = path_dag(n, 1);
        group.bench_with_input(BenchmarkId::new("min_radius_dag", n), &d, |b, d| {
            b.iter(|| approx_min_radius_dag(d).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("min_diameter_dag", n), &d, |b, d| {
            b.iter(|| approx_min_diameter_dag(d).unwrap())
        });
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    for n in SIZES {
        let g = connected(n, 1);
        group.bench_with_input(BenchmarkId::new("oracle_undirected", n), &g, |b, g| {
            b.iter(|| exact_eccentricities(g, Variant::Undirected).unwrap())
        });
    }
    for k in [2, 3, 4] {
        let (g, td) = ktree(1000, k, 1);
        group.bench_with_input(BenchmarkId::new("treewidth_n1000", k), &(g, td), |b, (g, td)| {
            b.iter(|| tw_eccentricities(g, td, Variant::Undirected).unwrap())
        });
    }
    group.finish();
}

fn hardness(c: &mut Criterion) {
    let mut group = c.benchmark_group("hardness");
    for n in [64, 256, 1024] {
        let ov = set_system(n, 64, Mode::Ov, 1);
        group.bench_with_input(BenchmarkId::new("ov_solver_d64", n), &ov, |b, i| {
            b.iter(|| solve_set_system(i))
        });
    }
    let hse = set_system(16, 6, Mode::Hse, 1);
    group.bench_function("roundtrip_radius_gadget", |b| {
        b.iter(|| gadget_roundtrip_radius(&hse).unwrap())
    });
    group.finish();
}

criterion_group!(benches, approx, exact, hardness);
criterion_main!(benches);
