use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use homlab_bench::{bigraph_instances, cycle, target};
use homlab_core::biclique::{all_bicliques, dominance, maximal_bicliques};
use homlab_core::compare::Comparator;
use homlab_core::fixtures;
use homlab_core::gadget::{phase_decompose_kab, GadgetParams};
use homlab_core::{count_col, count_fixcol, oracle, TwoColouredGraph};

fn fixcol(c: &mut Criterion) {
    let h = target("case1");
    let mut g = c.benchmark_group("fixcol_into_case1");
    for (name, j) in bigraph_instances() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &j, |b, j| b.iter(|| count_fixcol(black_box(&h), j).unwrap()));
    }
    g.finish();
}

fn col(c: &mut Criterion) {
    let h = fixtures::graph("toy");
    let mut g = c.benchmark_group("col_into_toy");
    for n in [4usize, 8, 12, 16] {
        let cyc = cycle(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &cyc, |b, cyc| b.iter(|| count_col(black_box(&h), cyc).unwrap()));
    }
    g.finish();
}

fn versus_naive(c: &mut Criterion) {
    let h = target("p4");
    let j = TwoColouredGraph::path(6);
    let mut g = c.benchmark_group("p6_into_p4");
    g.bench_function("backtracking", |b| b.iter(|| count_fixcol(black_box(&h), &j).unwrap()));
    g.bench_function("naive", |b| b.iter(|| oracle::naive_fixcol(black_box(&h), &j)));
    g.finish();
}

fn bicliques(c: &mut Criterion) {
    let h = target("case1");
    c.bench_function("maximal_bicliques_case1", |b| b.iter(|| maximal_bicliques(black_box(&h)).unwrap()));
    c.bench_function("all_bicliques_case1", |b| b.iter(|| all_bicliques(black_box(&h)).unwrap()));
    c.bench_function("dominance_case1", |b| b.iter(|| dominance(black_box(&h), &Comparator::default()).unwrap()));
}

fn gadget(c: &mut Criterion) {
    let h = target("coexistence");
    let k11 = TwoColouredGraph::complete(1, 1);
    let p = GadgetParams { a: 2, b: 2, copies_gamma: 1, copies_j: 0 };
    c.bench_function("kab_phases_coexistence", |b| b.iter(|| phase_decompose_kab(black_box(&h), &k11, &k11, &k11, p).unwrap()));
}

criterion_group!(benches, fixcol, col, versus_naive, bicliques, gadget);
criterion_main!(benches);
