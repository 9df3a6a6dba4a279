//! Parallel versus sequential scans. The sequential side runs the same code
//! inside a one-thread rayon pool; build with `--no-default-features` to
//! compile the rayon-free fallback instead.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use reticulation::algebra::FiniteResiduatedLattice;
use reticulation::constructions::{closed_subsets, direct_product};
use reticulation::filters::filters_by_subset_scan;
use reticulation::fixtures;
use reticulation::reticulate;
use reticulation::stone::{co_ann_by_subsets, is_strongly_stone_by_subsets};

fn inputs() -> Vec<(&'static str, FiniteResiduatedLattice)> {
    let c2 = fixtures::godel_chain(2);
    vec![
        ("iorgulescu12", fixtures::iorgulescu12()),
        ("chain2 x kowalski6", direct_product(&[&c2, &fixtures::kowalski6()]).unwrap().0),
        ("chain16", fixtures::godel_chain(16)),
    ]
}

fn bench_pools<F>(c: &mut Criterion, group: &str, f: F)
where
    F: Fn(&FiniteResiduatedLattice) + Sync,
{
    let sequential = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let parallel = ThreadPoolBuilder::new().build().unwrap();
    let mut g = c.benchmark_group(group);
    g.sample_size(20);
    for (name, a) in inputs() {
        g.bench_with_input(BenchmarkId::new("sequential", name), &a, |b, a| {
            b.iter(|| sequential.install(|| f(a)))
        });
        g.bench_with_input(BenchmarkId::new("parallel", name), &a, |b, a| {
            b.iter(|| parallel.install(|| f(a)))
        });
    }
    g.finish();
}

fn filters(c: &mut Criterion) {
    bench_pools(c, "filter subset scan", |a| {
        filters_by_subset_scan(a).unwrap();
    });
}

fn co_annihilators(c: &mut Criterion) {
    bench_pools(c, "co-annihilator subset scan", |a| {
        co_ann_by_subsets(a).unwrap();
        is_strongly_stone_by_subsets(a).unwrap();
    });
}

fn subalgebras(c: &mut Criterion) {
    bench_pools(c, "closed subsets", |a| {
        closed_subsets(a).unwrap();
    });
}

fn reticulation(c: &mut Criterion) {
    bench_pools(c, "reticulation with axioms", |a| {
        assert!(reticulate(a).unwrap().check_axioms().passed());
    });
}

criterion_group!(benches, filters, co_annihilators, subalgebras, reticulation);
criterion_main!(benches);
