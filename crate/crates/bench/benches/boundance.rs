use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use menger_bench::{random_instance, triangle_list};
use menger_core::boundance::{self, Method};
use menger_core::fixtures;
use menger_core::invariants;

fn rank(c: &mut Criterion) {
    let k = fixtures::hollow_simplex(5);
    let m = k.boundary_matrix(3).unwrap();
    c.bench_function("rank/hollow5_d3", |b| b.iter(|| black_box(&m).rank()));
}

fn sheets(c: &mut Criterion) {
    let mut group = c.benchmark_group("sheets");
    for s in [3usize, 5, 7] {
        let k = fixtures::sheets(s);
        let list = triangle_list(&k);
        for method in [Method::Primal, Method::Dual, Method::Recursive] {
            group.bench_with_input(BenchmarkId::new(method.to_string(), s), &s, |b, &s| {
                b.iter(|| boundance::is_k_boundant(&k, &list, s, method).unwrap())
            });
        }
    }
    group.finish();
}

fn random(c: &mut Criterion) {
    let instances: Vec<_> = (0..16).map(random_instance).collect();
    let mut group = c.benchmark_group("random");
    for k in [2usize, 3] {
        group.bench_with_input(BenchmarkId::new("all", k), &k, |b, &k| {
            b.iter(|| {
                for (cx, list) in &instances {
                    black_box(boundance::is_k_boundant(cx, list, k, Method::All).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn gamma(c: &mut Criterion) {
    let k = fixtures::tetra2_subdiv();
    c.bench_function("gamma_k/tetra2_subdiv_k3", |b| {
        b.iter(|| invariants::gamma_k(black_box(&k), 3).unwrap())
    });
}

criterion_group!(benches, rank, sheets, random, gamma);
criterion_main!(benches);
