use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use distchrom::{
    build_hypercube, build_lee_graph, chi2_closed_regular, chi3_closed_regular, chi_t_exact,
    hypercube_spectrum, hypercube_t45_bound, lee_spectrum, lp_minor_bound, numeric_spectrum,
    LeeParams, SearchBudget, DEFAULT_NUMERIC_TOL,
};
use std::hint::black_box;

fn closed_forms(c: &mut Criterion) {
    c.bench_function("chi2_closed_regular Q12", |b| {
        let s = hypercube_spectrum(12).unwrap();
        b.iter(|| chi2_closed_regular(black_box(&s), 1 << 12).unwrap())
    });
    c.bench_function("chi3_closed_regular G(3,7)", |b| {
        let s = lee_spectrum(LeeParams::new(3, 7).unwrap()).unwrap();
        let delta3 = s.power_sum(3) / 343.0;
        b.iter(|| chi3_closed_regular(black_box(&s), delta3, 343).unwrap())
    });
    c.bench_function("hypercube_t45_bound Q15 t=5", |b| {
        b.iter(|| hypercube_t45_bound(black_box(15), 5).unwrap())
    });
}

fn spectra(c: &mut Criterion) {
    c.bench_function("lee_spectrum G(4,7)", |b| {
        let params = LeeParams::new(4, 7).unwrap();
        b.iter(|| lee_spectrum(black_box(params)).unwrap())
    });
    c.bench_function("numeric_spectrum G(2,7)", |b| {
        let g = build_lee_graph(LeeParams::new(2, 7).unwrap()).unwrap();
        b.iter(|| numeric_spectrum(black_box(&g), DEFAULT_NUMERIC_TOL).unwrap())
    });
}

fn lp_and_oracle(c: &mut Criterion) {
    c.bench_function("lp_minor_bound G(3,5) t=4", |b| {
        let s = lee_spectrum(LeeParams::new(3, 5).unwrap()).unwrap();
        b.iter(|| lp_minor_bound(black_box(&s), 4, 125).unwrap())
    });
    c.bench_function("chi_t_exact Q3 t=2", |b| {
        let g = build_hypercube(3).unwrap();
        b.iter_batched(
            || g.clone(),
            |g| chi_t_exact(&g, 2, SearchBudget::unlimited()).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, closed_forms, spectra, lp_and_oracle);
criterion_main!(benches);
