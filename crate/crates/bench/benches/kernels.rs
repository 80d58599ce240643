use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use eisenworks::freelie::{epsilon, rank_of_span};
use eisenworks::itereis::build_i;
use eisenworks::lfun::lambda_completed;
use eisenworks::raeis::build_real_eisenstein;
use eisenworks::{LSeriesData, Variant};
use eisenworks_bench::{DIRICHLET_TERMS, EXPANSION_ORDERS};
use num_complex::Complex64;

fn real_eisenstein(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_real_eisenstein");
    g.sample_size(10);
    for order in EXPANSION_ORDERS {
        g.bench_with_input(BenchmarkId::new("w4", order), &order, |b, &n| {
            b.iter(|| build_real_eisenstein(4, black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn iterated_integrals(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_i");
    g.sample_size(10);
    for maxweight in [6u32, 10] {
        g.bench_with_input(
            BenchmarkId::new("len2_order8", maxweight),
            &maxweight,
            |b, &w| b.iter(|| build_i(2, black_box(w), 8).unwrap()),
        );
    }
    g.finish();
}

fn epsilon_brackets(c: &mut Criterion) {
    let mut g = c.benchmark_group("epsilon_brackets");
    g.sample_size(10);
    g.bench_function("pollack_weight14", |b| {
        b.iter(|| {
            let br = |i, j| {
                epsilon(i, Variant::Dual)
                    .unwrap()
                    .bracket(&epsilon(j, Variant::Dual).unwrap())
            };
            rank_of_span(&[br(10, 4), br(8, 6)]).unwrap()
        })
    });
    g.finish();
}

fn lambda(c: &mut Criterion) {
    let mut g = c.benchmark_group("lambda_completed");
    g.sample_size(10);
    for terms in DIRICHLET_TERMS {
        let data = LSeriesData::eisenstein(2, 0, terms).unwrap();
        g.bench_with_input(BenchmarkId::new("e20_s8", terms), &data, |b, d| {
            b.iter(|| lambda_completed(d, black_box(Complex64::new(8.0, 0.0))).unwrap())
        });
    }
    g.finish();
}

criterion_group!(
    kernels,
    real_eisenstein,
    iterated_integrals,
    epsilon_brackets,
    lambda
);
criterion_main!(kernels);
