use criterion::{black_box, criterion_group, criterion_main, Criterion};
use sasaki_bench::{berger_sphere, generic_frame, samples};
use sasaki_core::classify::{verify_hopf_theorems, SuiteConfig};
use sasaki_core::hopf::{build_cylinder, cylinder_frame_oracle, SurfaceOperator};
use sasaki_core::operators::{bitension_curve, bitension_curve_oracle, laplacian_h_oracle};
use sasaki_core::{extract_frenet, synthesize_frenet_curve};

const H: f64 = 1e-3;

fn kappa(s: f64) -> f64 {
    1.0 + 0.3 * s.sin()
}

fn tau(s: f64) -> f64 {
    0.5 + 0.2 * s
}

fn synthesis(c: &mut Criterion) {
    let sf = berger_sphere();
    let n = samples(2.0, H);
    c.bench_function("synthesize_frenet_curve n=2001", |b| {
        b.iter(|| synthesize_frenet_curve(&sf, kappa, tau, generic_frame(), black_box(H), n).unwrap())
    });
}

fn extraction(c: &mut Criterion) {
    let sf = berger_sphere();
    let (curve, _) = synthesize_frenet_curve(&sf, kappa, tau, generic_frame(), H, samples(2.0, H)).unwrap();
    c.bench_function("extract_frenet n=2001", |b| b.iter(|| extract_frenet(&sf, black_box(&curve)).unwrap()));
}

fn oracles(c: &mut Criterion) {
    let sf = berger_sphere();
    let (curve, _) = synthesize_frenet_curve(&sf, kappa, tau, generic_frame(), H, samples(2.0, H)).unwrap();
    let fd = extract_frenet(&sf, &curve).unwrap();
    c.bench_function("laplacian_h_oracle n=2001", |b| b.iter(|| laplacian_h_oracle(&sf, &curve, black_box(&fd)).unwrap()));
    c.bench_function("bitension closed form n=2001", |b| b.iter(|| bitension_curve(&sf, black_box(&fd))));
    c.bench_function("bitension oracle n=2001", |b| b.iter(|| bitension_curve_oracle(&sf, &curve, black_box(&fd)).unwrap()));
    let cyl = build_cylinder(&sf, |s| 1.0 + s * s, H, samples(2.0, H)).unwrap();
    c.bench_function("cylinder jacobi oracle n=2001", |b| {
        b.iter(|| cylinder_frame_oracle(black_box(&cyl), SurfaceOperator::Jacobi).unwrap())
    });
}

fn suites(c: &mut Criterion) {
    let config = SuiteConfig::default();
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    group.bench_function("verify_hopf_theorems c=5", |b| b.iter(|| verify_hopf_theorems(black_box(&[5.0]), &config).unwrap()));
    group.finish();
}

criterion_group!(benches, synthesis, extraction, oracles, suites);
criterion_main!(benches);
