use criterion::{criterion_group, criterion_main, Criterion};
use rrclosure::monomial::{rr_chain, rr_closure, rr_oracle_closure};
use rrclosure::{integral_closure_2v, ClosureConfig};
use rrclosure_bench::{gap_ideal, sparse_staircase};
use std::hint::black_box;

fn closure(c: &mut Criterion) {
    let cfg = ClosureConfig::default();
    let j = gap_ideal();
    c.bench_function("rr_closure/gap_ideal", |b| {
        b.iter(|| rr_closure(black_box(&j), &cfg).unwrap())
    });
    c.bench_function("rr_oracle/gap_ideal", |b| {
        b.iter(|| rr_oracle_closure(black_box(&j), &cfg).unwrap())
    });
    let wide = sparse_staircase(6);
    c.bench_function("rr_chain/sparse_staircase_6", |b| {
        b.iter(|| rr_chain(black_box(&wide), &cfg).unwrap())
    });
    c.bench_function("integral_closure/sparse_staircase_6", |b| {
        b.iter(|| integral_closure_2v(black_box(&wide)).unwrap())
    });
}

criterion_group!(benches, closure);
criterion_main!(benches);
