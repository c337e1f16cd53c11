use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use chebknot::chebyshev_knot::{numeric_sign_vector, search_many, CertificationPolicy};
use chebknot::harmonic;
use chebknot::invariants::{identify, kauffman_bracket};
use chebknot::{ChebyshevKnotSpec, HarmonicKnotSpec, SearchConfig, SignAssignment};
use chebknot_bench::{diagram, pd, HARMONIC};

fn exact_diagrams(c: &mut Criterion) {
    let mut group = c.benchmark_group("harmonic_build_diagram");
    for (a, b, h) in HARMONIC {
        let spec = HarmonicKnotSpec::new(a, b, h).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("H({a},{b},{h})")),
            &spec,
            |bench, s| bench.iter(|| harmonic::build_diagram(black_box(s)).unwrap()),
        );
    }
    group.finish();
}

fn bracket(c: &mut Criterion) {
    let mut group = c.benchmark_group("kauffman_bracket");
    group.sample_size(10);
    for (a, b, h) in HARMONIC {
        let code = pd(a, b, h);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{}x", code.len())),
            &code,
            |bench, p| bench.iter(|| kauffman_bracket(black_box(p)).unwrap()),
        );
    }
    group.finish();
}

fn identification(c: &mut Criterion) {
    let d = diagram(5, 6, 19);
    c.bench_function("identify_H(5,6,19)", |bench| {
        bench.iter(|| identify(black_box(&d)).unwrap())
    });
}

fn certified_signs(c: &mut Criterion) {
    let policy = CertificationPolicy::default();
    let spec = ChebyshevKnotSpec::new(5, 6, 33, "0.0148".parse().unwrap()).unwrap();
    c.bench_function("numeric_sign_vector_(5,6,33)", |bench| {
        bench.iter(|| numeric_sign_vector(black_box(&spec), &policy).unwrap())
    });
}

fn search(c: &mut Criterion) {
    let config = SearchConfig {
        c_max: 1000,
        phi_step: "0.001".parse().unwrap(),
        ..SearchConfig::default()
    };
    let targets = SignAssignment::all(4);
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("all_16_targets_(3,5)", |bench| {
        bench.iter(|| search_many(3, 5, black_box(&targets), &config).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    exact_diagrams,
    bracket,
    identification,
    certified_signs,
    search
);
criterion_main!(benches);
