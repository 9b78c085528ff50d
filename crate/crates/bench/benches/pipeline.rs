//! Benchmarks along the main pipeline: group construction, conjugacy
//! classes, scheme validation, block closure and the center computation.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use twa_core::group::{build_group, conjugacy_classes};
use twa_core::scheme::{group_scheme, trivial_scheme, wreath};
use twa_core::terwilliger::{block_closure, center_dimension, dual_idempotents};

fn bench_group_construction(c: &mut Criterion) {
    c.bench_function("build z3sq_q8", |b| {
        b.iter(|| black_box(build_group("z3sq_q8").unwrap()))
    });
    c.bench_function("conjugacy classes of z3sq_q8", |b| {
        let g = build_group("z3sq_q8").unwrap();
        b.iter(|| black_box(conjugacy_classes(&g)))
    });
}

fn bench_closure(c: &mut Criterion) {
    for spec in ["frobenius:3:1", "q8", "heisenberg:3"] {
        let g = build_group(spec).unwrap();
        let classes = conjugacy_classes(&g);
        let s = group_scheme(&g, &classes);
        let duals = dual_idempotents(&s, g.identity()).unwrap();
        c.bench_function(&format!("block closure {spec}"), |b| {
            b.iter(|| black_box(block_closure(&s, &duals).dim()))
        });
    }
}

fn bench_center(c: &mut Criterion) {
    let g = build_group("q8").unwrap();
    let s = group_scheme(&g, &conjugacy_classes(&g));
    let duals = dual_idempotents(&s, g.identity()).unwrap();
    let closure = block_closure(&s, &duals);
    c.bench_function("center dimension q8", |b| {
        b.iter(|| black_box(center_dimension(&s, &closure)))
    });
}

fn bench_scheme_ops(c: &mut Criterion) {
    let z2sq = build_group("prod:cyclic:2,cyclic:2").unwrap();
    let outer = group_scheme(&z2sq, &conjugacy_classes(&z2sq));
    let inner = trivial_scheme(9).unwrap();
    c.bench_function("wreath K9 by G(Z2^2)", |b| {
        b.iter(|| black_box(wreath(&inner, &outer)))
    });
    let g = build_group("z3sq_q8").unwrap();
    let s = group_scheme(&g, &conjugacy_classes(&g));
    c.bench_function("validate order-72 scheme", |b| {
        b.iter(|| black_box(s.validate().is_ok()))
    });
}

criterion_group!(
    benches,
    bench_group_construction,
    bench_closure,
    bench_center,
    bench_scheme_ops
);
criterion_main!(benches);
