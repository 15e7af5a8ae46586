use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use incpoly_core::series::gf_fib_incomplete_closed;
use incpoly_core::{
    fib, fib_explicit, verify_identity_range, FamilyParams, IdentityId, Polynomial,
};

fn params(text: &str) -> FamilyParams {
    FamilyParams::new(Polynomial::parse(text).unwrap())
}

fn bench_families(c: &mut Criterion) {
    let x = params("x");
    let one = params("1");
    c.bench_function("fib_recurrence_h_x_n200", |b| {
        b.iter(|| fib(black_box(&x), black_box(200)))
    });
    c.bench_function("fib_explicit_h_x_n200", |b| {
        b.iter(|| fib_explicit(black_box(&x), black_box(200)))
    });
    c.bench_function("fib_recurrence_h_1_n10000", |b| {
        b.iter(|| fib(black_box(&one), black_box(10_000)))
    });
}

fn bench_identity_sweeps(c: &mut Criterion) {
    let quad = params("x^2+1");
    c.bench_function("verify_row_sum_fib_n20", |b| {
        b.iter(|| verify_identity_range(IdentityId::RowSumFib, black_box(&quad), 20))
    });
    c.bench_function("verify_lucas_binom_sum_n15", |b| {
        b.iter(|| verify_identity_range(IdentityId::LucasBinomSum, black_box(&quad), 15))
    });
}

fn bench_series(c: &mut Criterion) {
    let quad = params("x^2+1");
    c.bench_function("gf_fib_incomplete_l3_order40", |b| {
        b.iter(|| gf_fib_incomplete_closed(black_box(&quad), 3, 40))
    });
}

fn bench_parser(c: &mut Criterion) {
    let text = "12x^12 - 7x^9 + 100000000000000000001x^5 - x + 42";
    c.bench_function("parse_format_round_trip", |b| {
        b.iter_batched(
            || text,
            |t| {
                let p = Polynomial::parse(t).unwrap();
                black_box(p.to_text())
            },
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_families,
    bench_identity_sweeps,
    bench_series,
    bench_parser
);
criterion_main!(benches);
