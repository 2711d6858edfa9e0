use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hopfcyc::cyclic::{compute_j, cover_algebra, cyc_algebra, HopfCyclicTower};
use hopfcyc::fixtures::{dual_numbers, dual_numbers_sign, sign_coefficients};
use hopfcyc::homology::{cohomology_table, Model};
use hopfcyc::{Field, Matrix, Rational};

fn kernel(c: &mut Criterion) {
    // A dense-ish integer matrix with a known rank defect.
    let n = 60;
    let m = Matrix::<Rational>::from_fn(n, n, |j| {
        (0..n).filter(|i| (i * 7 + j * 3) % 5 != 0).map(|i| (i, Rational::from_i64(((i * j) % 11) as i64 - 5))).collect()
    });
    c.bench_function("kernel 60x60 over Q", |b| b.iter(|| black_box(&m).kernel()));
}

fn closure(c: &mut Criterion) {
    let a = dual_numbers_sign::<Rational>();
    let m = sign_coefficients();
    let t = cover_algebra(&a, &m, 4, 6).unwrap();
    c.bench_function("J closure, dual numbers over kZ/2, top 6", |b| b.iter(|| compute_j(black_box(&t), 0, false)));
    c.bench_function("tower, dual numbers over kZ/2, top 6", |b| {
        b.iter(|| HopfCyclicTower::build(black_box(t.clone()), 4, false).unwrap())
    });
}

fn cohomology(c: &mut Criterion) {
    let x = cyc_algebra(&dual_numbers::<Rational>(), 5, 5);
    for model in [Model::Bicomplex, Model::Mixed] {
        c.bench_function(&format!("HC of Cyc(k[x]/x^2), top 5, {model}"), |b| {
            b.iter(|| cohomology_table(black_box(&x), model, false).unwrap())
        });
    }
}

criterion_group!(benches, kernel, closure, cohomology);
criterion_main!(benches);
