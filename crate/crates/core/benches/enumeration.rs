use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qacodes::algebra::AbelianGroup;
use qacodes::catalog::{LONG_BINARY, LONG_TERNARY, QA_50_12_18};
use qacodes::linear_codes::weight_distribution_with;
use qacodes::search::{search_with, SearchSpec};
use qacodes::Exec;

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn weights(c: &mut Criterion) {
    let mut group = c.benchmark_group("weight_distribution");
    let binary = LONG_BINARY.decomposition().unwrap();
    let ternary = LONG_TERNARY.decomposition().unwrap();
    let codes = [
        ("qa-50-12-18", QA_50_12_18.build().unwrap().flattened().clone()),
        (
            "binary 4-ideal sum",
            binary.ideal_sum_code(&LONG_BINARY.classes(&binary).unwrap()).unwrap(),
        ),
        (
            "ternary 3-ideal sum",
            ternary
                .ideal_sum_code(&LONG_TERNARY.classes(&ternary).unwrap()[..3])
                .unwrap(),
        ),
    ];
    for (name, code) in &codes {
        for (policy, exec) in POLICIES {
            group.bench_with_input(BenchmarkId::new(*name, policy), code, |b, code| {
                b.iter(|| weight_distribution_with(black_box(code), 1 << 26, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let mut spec = SearchSpec::new(2, AbelianGroup::new(vec![3, 3]).unwrap(), 3, 12);
    spec.dim_target = Some(6);
    for (policy, exec) in POLICIES {
        group.bench_function(BenchmarkId::new("F2[C3xC3]^3 d>=12", policy), |b| {
            b.iter(|| search_with(black_box(&spec), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, weights, search);
criterion_main!(benches);
