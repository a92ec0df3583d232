use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_rational::Ratio;

use clawsquare::coloring::{chromatic_exact, greedy_trivial_square_coloring, main_square_coloring, Budget};
use clawsquare::corpus::Family;
use clawsquare::generators::c5_blowup;
use clawsquare::recognition::{is_quasi_line, krausz_partition};
use clawsquare::verifier::{Config, SparsityContext};
use clawsquare_bench::{corpus_family, line_graph, regular};

fn structure(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure");
    for n in [10, 20, 30] {
        let g = line_graph(n);
        group.bench_with_input(BenchmarkId::new("square", n), &g, |b, g| {
            b.iter(|| black_box(g.square()))
        });
        group.bench_with_input(BenchmarkId::new("krausz", n), &g, |b, g| {
            b.iter(|| black_box(krausz_partition(g)))
        });
        group.bench_with_input(BenchmarkId::new("quasi_line", n), &g, |b, g| {
            b.iter(|| black_box(is_quasi_line(g)))
        });
    }
    group.finish();
}

fn coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("coloring");
    group.sample_size(20);
    let sq = c5_blowup(3).unwrap().line_graph().graph.square();
    group.bench_function("exact_c5_blowup_3", |b| {
        b.iter(|| chromatic_exact(black_box(&sq), None, Budget::default()))
    });
    for family in [Family::LineGraph, Family::CircularInterval, Family::Composition] {
        let graphs = corpus_family(family, 10);
        let name = format!("{family:?}");
        group.bench_with_input(BenchmarkId::new("greedy_trivial", &name), &graphs, |b, gs| {
            b.iter(|| {
                gs.iter()
                    .map(|g| greedy_trivial_square_coloring(g).unwrap().colors_used)
                    .sum::<usize>()
            })
        });
        group.bench_with_input(BenchmarkId::new("main", &name), &graphs, |b, gs| {
            b.iter(|| {
                gs.iter()
                    .map(|g| main_square_coloring(g, Ratio::new(1, 36)).unwrap().result.colors_used)
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn sparsity(c: &mut Criterion) {
    let mut group = c.benchmark_group("sparsity");
    group.sample_size(10);
    for delta in [8, 12] {
        let f = regular(4 * delta, delta);
        group.bench_with_input(BenchmarkId::new("all_edges", delta), &f, |b, f| {
            b.iter(|| {
                let ctx = SparsityContext::new(f);
                (0..ctx.edge_count())
                    .filter(|&e| ctx.report(e, &Config::default()).unwrap().all_pass())
                    .count()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, structure, coloring, sparsity);
criterion_main!(benches);
