use std::hint::black_box;

use bowtie_bench::steiner;
use bowtie_core::bowtie::{build_bowtie, components};
use bowtie_core::census::{underlying_graph, TriadCensus};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("triad_census");
    for n in [49, 99, 201] {
        let u = underlying_graph(&steiner(n));
        group.bench_with_input(BenchmarkId::new("fast", n), &u, |b, u| {
            b.iter(|| TriadCensus::compute(black_box(u)))
        });
    }
    let u = underlying_graph(&steiner(49));
    group.bench_function("brute_force/49", |b| b.iter(|| TriadCensus::brute_force(black_box(&u))));
    group.finish();
}

fn bowtie(c: &mut Criterion) {
    let mut group = c.benchmark_group("bowtie");
    group.sample_size(20);
    for n in [49, 99, 201] {
        let h = steiner(n);
        group.bench_with_input(BenchmarkId::new("build", n), &h, |b, h| {
            b.iter(|| build_bowtie(black_box(h)))
        });
        let graph = build_bowtie(&h);
        group.bench_with_input(BenchmarkId::new("components", n), &graph, |b, g| {
            b.iter(|| components(black_box(g)))
        });
    }
    group.finish();
}

criterion_group!(benches, census, bowtie);
criterion_main!(benches);
