use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use czi_bench::{named, random_graphs, EXTREMA_SPECS};
use czi_core::coloring::chromatic_number;
use czi_core::stability::stability_number_bruteforce;
use czi_core::verify::oracle::naive_extrema;
use czi_core::{extrema_set, ExtremaOptions, Semantics, StabilityBudget};

fn extrema(c: &mut Criterion) {
    let mut group = c.benchmark_group("extrema_all");
    for spec in EXTREMA_SPECS {
        let g = named(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| extrema_set(g, &ExtremaOptions::default()))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("extrema_permutation");
    for spec in EXTREMA_SPECS {
        let g = named(spec);
        let options = ExtremaOptions::new(Semantics::Permutation);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| extrema_set(g, &options))
        });
    }
    group.finish();
}

fn engine_vs_oracle(c: &mut Criterion) {
    let graphs = random_graphs(7, 20);
    let mut group = c.benchmark_group("random_order_7");
    group.bench_function("engine", |b| {
        b.iter(|| {
            for g in &graphs {
                extrema_set(g, &ExtremaOptions::default());
            }
        })
    });
    group.bench_function("naive_oracle", |b| {
        b.iter(|| {
            for g in &graphs {
                naive_extrema(g);
            }
        })
    });
    group.finish();
}

fn chromatic(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic_number");
    for n in [10, 14, 18] {
        let graphs = random_graphs(n, 10);
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, graphs| {
            b.iter(|| graphs.iter().map(chromatic_number).sum::<u32>())
        });
    }
    group.finish();
}

fn stability(c: &mut Criterion) {
    let mut group = c.benchmark_group("rho_search");
    group.sample_size(10);
    for spec in ["cycle:6", "path:7", "cycle:7"] {
        let g = named(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| stability_number_bruteforce(g, &StabilityBudget::default()))
        });
    }
    group.finish();
}

criterion_group!(benches, extrema, engine_vs_oracle, chromatic, stability);
criterion_main!(benches);
