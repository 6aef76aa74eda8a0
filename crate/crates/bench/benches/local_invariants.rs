use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use schubloc::*;

fn fixture(w: &str, x: &str) -> (WeylElement, WeylElement) {
    let g = WeylGroup::from_label("A5").unwrap();
    (g.parse_element(w).unwrap(), g.parse_element(x).unwrap())
}

fn subexpressions_fixture_2(c: &mut Criterion) {
    let (w, x) = fixture("3 4 1 6 2 5", "5 6 3 4 1 2");
    let word = [2, 1, 4, 3, 5, 4, 2, 1, 3, 2, 5, 4];
    c.bench_function("subexpressions/fixture 2", |b| {
        b.iter(|| {
            localize::subexpressions(&w, &x, Variant::Opposite, Some(&word), SubexpressionMode::Reduced).unwrap()
        })
    });
}

fn evaluation_fixture_3(c: &mut Criterion) {
    let (w, x) = fixture("4 3 1 6 2 5", "5 6 3 4 1 2");
    c.bench_function("multiplicity/fixture 3", |b| {
        b.iter(|| multiplicity(black_box(&w), black_box(&x), Variant::Opposite).unwrap())
    });
    c.bench_function("hilbert/fixture 3", |b| {
        b.iter(|| hilbert_series(black_box(&w), black_box(&x), Variant::Opposite, 12).unwrap())
    });
}

fn bruhat_a5(c: &mut Criterion) {
    let g = WeylGroup::from_label("A5").unwrap();
    let els = g.elements();
    let sample: Vec<_> = els.iter().step_by(37).cloned().collect();
    c.bench_function("bruhat/A5 sample", |b| {
        b.iter(|| {
            let mut n = 0usize;
            for u in &sample {
                for v in &sample {
                    n += u.bruhat_leq(v).unwrap() as usize;
                }
            }
            n
        })
    });
}

criterion_group!(benches, subexpressions_fixture_2, evaluation_fixture_3, bruhat_a5);
criterion_main!(benches);
