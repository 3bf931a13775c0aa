use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qident_core::qseries::pochhammer;
use qident_core::{Polynomial, RationalFunction, Scalar};

fn pochhammer_rf(n: u32) -> RationalFunction {
    let q = RationalFunction::q_monomial(1);
    pochhammer(&q.recip().unwrap(), &RationalFunction::q_monomial(-2), n)
}

fn rational_functions(c: &mut Criterion) {
    let a = pochhammer_rf(8);
    let b = pochhammer_rf(6).recip().unwrap() + RationalFunction::q_monomial(-3);
    c.bench_function("rf_add", |bench| bench.iter(|| black_box(&a) + black_box(&b)));
    c.bench_function("rf_mul", |bench| bench.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("rf_div", |bench| bench.iter(|| black_box(&a).try_div(black_box(&b)).unwrap()));
}

fn polynomial_gcd(c: &mut Criterion) {
    let f = Polynomial::from_integers(&[1, -3, 0, 2, 5, -1, 4]);
    let g = Polynomial::from_integers(&[-2, 7, 1, 0, -3, 6]);
    let h = Polynomial::from_integers(&[3, 1, -1, 2, 1]);
    let (x, y) = (&f * &h, &g * &h);
    c.bench_function("poly_gcd", |bench| bench.iter(|| black_box(&x).gcd(black_box(&y))));
}

criterion_group!(benches, rational_functions, polynomial_gcd);
criterion_main!(benches);
