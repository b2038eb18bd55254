use bkcolor::bounds::{self, reference};
use bkcolor::families;
use bkcolor::pipeline::{color_graph, PipelineConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_color_graph(c: &mut Criterion) {
    let mut group = c.benchmark_group("color_graph");
    group.sample_size(10);
    for n in [1000usize, 2000, 4000] {
        let g = families::gnp(1, n, 8.0 / n as f64);
        group.bench_with_input(BenchmarkId::new("fixed_avg_degree", n), &g, |b, g| {
            b.iter(|| color_graph(g, &PipelineConfig::default()).unwrap());
        });
    }
    // dense ring where decomposition, resampling and extension all run
    let ring = families::clique_ring(6, 240);
    group.bench_with_input(BenchmarkId::new("clique_ring", ring.n()), &ring, |b, g| {
        b.iter(|| color_graph(g, &PipelineConfig::default()).unwrap());
    });
    group.finish();
}

fn bench_bounds(c: &mut Criterion) {
    c.bench_function("optimize_triple_fraction", |b| {
        b.iter(|| bounds::optimize_triple_fraction(reference::EPSILON, 64));
    });
    c.bench_function("leftover_lll_threshold", |b| {
        b.iter(bounds::leftover_lll_threshold);
    });
}

criterion_group!(benches, bench_color_graph, bench_bounds);
criterion_main!(benches);
