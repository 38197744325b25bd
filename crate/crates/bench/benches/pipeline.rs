//! End-to-end benchmarks: composition, decomposition, signature
//! classification, and full case realization at small orders.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use szego_core::compose::compose_factor_values;
use szego_core::{
    decompose_poly, enumerate_cases, phi_eigen_check, realize_case, signature_pair,
    GaussRational, Mode, Rational, SearchConfig,
};

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn random_values(rng: &mut ChaCha8Rng, count: usize) -> Vec<GaussRational> {
    (0..count)
        .map(|_| GaussRational::from_real(rat(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=20))))
        .collect()
}

fn bench_compose(c: &mut Criterion) {
    let mut group = c.benchmark_group("compose");
    for n in [4usize, 8, 12] {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let values = random_values(&mut rng, n - 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| compose_factor_values(&values, 0, &rat(1, 1), n).unwrap())
        });
    }
    group.finish();
}

fn bench_decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for n in [4usize, 8, 12] {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let values = random_values(&mut rng, n - 1);
        let p = compose_factor_values(&values, 0, &rat(1, 1), n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| decompose_poly(&p, n).unwrap())
        });
    }
    group.finish();
}

fn bench_signature(c: &mut Criterion) {
    let mut group = c.benchmark_group("signature");
    for n in [4usize, 8] {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let values = random_values(&mut rng, n - 1);
        let p = compose_factor_values(&values, 0, &rat(1, 1), n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| signature_pair(&p, n, Mode::Polynomial).unwrap())
        });
    }
    group.finish();
}

fn bench_realize(c: &mut Criterion) {
    let mut group = c.benchmark_group("realize");
    group.sample_size(10);
    let cfg = SearchConfig::default();
    for n in [3usize, 4] {
        let specs = enumerate_cases(n).unwrap();
        let spec = specs
            .iter()
            .find(|s| !s.construction_unsupported && s.m + s.k1 + s.k_c > 0)
            .unwrap()
            .clone();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| realize_case(&spec, Mode::Polynomial, &cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_phi(c: &mut Criterion) {
    c.bench_function("phi-eigen-n8", |b| {
        b.iter(|| phi_eigen_check(8, Mode::Polynomial).unwrap())
    });
}

criterion_group!(
    benches,
    bench_compose,
    bench_decompose,
    bench_signature,
    bench_realize,
    bench_phi
);
criterion_main!(benches);
