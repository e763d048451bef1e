use std::hint::black_box;

use chromospan::analysis;
use chromospan::offline;
use chromospan::online::OnlineColorer;
use chromospan::proximity;
use chromospan_bench::unit_square_points;
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_colorings(c: &mut Criterion) {
    let pts = unit_square_points(1, 200);

    c.bench_function("cones_k5_n200", |b| {
        b.iter(|| offline::color_cones_k(black_box(&pts), 5).unwrap())
    });

    c.bench_function("online_k5_n200", |b| {
        b.iter(|| {
            let mut oc = OnlineColorer::new(5).unwrap();
            for &p in &pts {
                oc.insert(p).unwrap();
            }
            oc.colors().len()
        })
    });

    let pts100 = unit_square_points(2, 100);
    c.bench_function("ellipse3_n100", |b| {
        b.iter(|| offline::color_ellipse_3(black_box(&pts100)).unwrap())
    });
}

fn bench_structures(c: &mut Criterion) {
    let pts = unit_square_points(3, 500);
    c.bench_function("delaunay_n500", |b| {
        b.iter(|| proximity::delaunay(black_box(&pts)).unwrap())
    });
    c.bench_function("emst_n500", |b| {
        b.iter(|| proximity::emst(black_box(&pts)).unwrap())
    });
}

fn bench_oracles(c: &mut Criterion) {
    let pts = unit_square_points(4, 200);
    let coloring = offline::color_cones_k(&pts, 4).unwrap();

    c.bench_function("stretch_factor_n200_k4", |b| {
        b.iter(|| analysis::stretch_factor(black_box(&pts), black_box(&coloring)))
    });

    c.bench_function("sparsify_eps05_n200_k4", |b| {
        b.iter(|| analysis::sparsify_greedy(black_box(&pts), black_box(&coloring), 0.5))
    });
}

criterion_group!(benches, bench_colorings, bench_structures, bench_oracles);
criterion_main!(benches);
