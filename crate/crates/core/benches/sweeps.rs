//! Sequential against rayon-parallel scheduling on the batch entry points.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use std::hint::black_box;

use umbra_core::appell::{expansion_coefficients_with, AppellFamily};
use umbra_core::checks::{run_suite, SuiteConfig};
use umbra_core::exec::{self, Execution};
use umbra_core::opcalc::laguerre::{integro_diff_evolve_with, InitialCondition};
use umbra_core::opcalc::quadrature::gauss_weighted_integral_with;
use umbra_core::opcalc::symbol::Spectrum;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn hermite_grid(c: &mut Criterion) {
    let xs: Vec<f64> = (0..64).map(|j| -2.0 + 4.0 * j as f64 / 63.0).collect();
    let mut g = c.benchmark_group("hermite_integral_grid");
    for (name, mode) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                exec::map(mode, &xs, |&x| {
                    gauss_weighted_integral_with(Execution::Sequential, |k| Complex64::new(0.0, k * x).exp(), 0.5)
                        .unwrap()
                        .value
                })
            })
        });
    }
    g.finish();
}

fn integro_diff_grid(c: &mut Criterion) {
    let pts: Vec<(f64, f64)> = (0..4).flat_map(|i| (0..4).map(move |j| (i as f64 / 6.0, 0.5 * j as f64))).collect();
    let f = InitialCondition::Tricomi;
    let mut g = c.benchmark_group("integro_diff_grid");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| exec::map(mode, &pts, |&(x, t)| integro_diff_evolve_with(Execution::Sequential, &f, 0.0, 2, t, x).unwrap().value))
        });
    }
    g.finish();
}

fn expansion(c: &mut Criterion) {
    let fam = AppellFamily::bernoulli(32).unwrap();
    let f = Spectrum::gaussian(1.0).unwrap();
    let mut g = c.benchmark_group("appell_expansion");
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 20), &20, |b, &n| {
            b.iter(|| expansion_coefficients_with(mode, &fam, &f, black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("check_suite");
    g.sample_size(10);
    for suite in ["involution", "hermite-integral"] {
        for (name, mode) in MODES {
            let cfg = SuiteConfig { exec: mode, ..SuiteConfig::default() };
            g.bench_with_input(BenchmarkId::new(name, suite), suite, |b, s| b.iter(|| run_suite(s, &cfg).unwrap()));
        }
    }
    g.finish();
}

criterion_group!(benches, hermite_grid, integro_diff_grid, expansion, suites);
criterion_main!(benches);
