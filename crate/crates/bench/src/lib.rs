//! Criterion benchmarks for the enumerators.

use criterion::{black_box, BenchmarkId, Criterion};
use mintri::{enum_min_seps, enum_min_triangulations, enum_proper_tds, Extender, Graph};

/// `k` by `k` grid graph.
pub fn grid(k: usize) -> Graph {
    let id = |r: usize, c: usize| r * k + c;
    let mut edges = Vec::new();
    for r in 0..k {
        for c in 0..k {
            if c + 1 < k {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < k {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(k * k, edges).unwrap()
}

/// Cycle on `n` vertices with one extra vertex joined to every other vertex
/// of the cycle.
pub fn wheel_spokes(n: usize) -> Graph {
    let hub = n;
    let spokes = (0..n).step_by(2).map(|v| (v, hub));
    Graph::from_edges(n + 1, Graph::cycle(n).edges().chain(spokes)).unwrap()
}

pub fn benchmarks(c: &mut Criterion) {
    let mut group = c.benchmark_group("minseps");
    for (name, g) in [("grid4", grid(4)), ("c12", Graph::cycle(12)), ("spokes10", wheel_spokes(10))] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| enum_min_seps(black_box(g)).unwrap().count())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("triangulations");
    group.sample_size(20);
    for extender in [Extender::BlackBox, Extender::Separator] {
        let g = Graph::cycle(8);
        group.bench_with_input(BenchmarkId::new("c8", format!("{extender:?}")), &g, |b, g| {
            b.iter(|| enum_min_triangulations(black_box(g), extender).unwrap().count())
        });
        let g = grid(3);
        group.bench_with_input(BenchmarkId::new("grid3", format!("{extender:?}")), &g, |b, g| {
            b.iter(|| enum_min_triangulations(black_box(g), extender).unwrap().count())
        });
    }
    group.bench_function("c12_first", |b| {
        let g = Graph::cycle(12);
        b.iter(|| enum_min_triangulations(black_box(&g), Extender::BlackBox).unwrap().next())
    });
    group.finish();

    let mut group = c.benchmark_group("treedecomps");
    group.sample_size(20);
    let g = wheel_spokes(8);
    group.bench_function("spokes8", |b| b.iter(|| enum_proper_tds(black_box(&g), Extender::BlackBox).unwrap().count()));
    group.finish();
}
