use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hkrr_core::algebra::{int, TruncSeries};
use hkrr_core::chern::{chern_character, chi_p_form, exterior_power_ch, todd_class};
use hkrr_core::rr::{count_perfect_matchings, fujiki_polarized, BBGram};
use hkrr_core::solver::{assemble_rr_equations, nieper_rhs, og10_chern_numbers};
use hkrr_core::RingSpec;

fn matchings(c: &mut Criterion) {
    let gram = BBGram::new(
        vec!["F".into(), "Theta".into()],
        vec![vec![int(0), int(1)], vec![int(1), int(0)]],
    )
    .unwrap();
    let slots = gram.parse_slots("Theta^5*F^5").unwrap();
    c.bench_function("fujiki Theta^5 F^5", |b| {
        b.iter(|| fujiki_polarized(&int(945), &gram, black_box(&slots)).unwrap())
    });
    let dense = BBGram::from_entries(vec![vec![int(2), int(3)], vec![int(3), int(-1)]]).unwrap();
    let mixed: Vec<usize> = (0..12).map(|i| i % 2).collect();
    c.bench_function("fujiki dense 12 slots", |b| {
        b.iter(|| fujiki_polarized(&int(1), &dense, black_box(&mixed)).unwrap())
    });
    c.bench_function("count matchings 14", |b| b.iter(|| count_perfect_matchings(black_box(14))));
}

fn series(c: &mut Criterion) {
    let s = TruncSeries::from_fn(20, |i| int(i as i64 % 5 - 2) + int(i64::from(i == 0) * 3));
    c.bench_function("series log/exp order 20", |b| {
        b.iter(|| black_box(&s).log().unwrap().exp().unwrap())
    });
}

fn classes(c: &mut Criterion) {
    let spec = RingSpec::hyperkahler(5);
    c.bench_function("todd class hk10", |b| b.iter(|| todd_class(black_box(spec))));
    let ch = chern_character(spec, 10);
    c.bench_function("ch(Lambda^4) hk10", |b| {
        b.iter(|| exterior_power_ch(black_box(&ch), 10, 4).unwrap())
    });
    c.bench_function("chi^4 form hk10", |b| b.iter(|| chi_p_form(black_box(spec), 4).unwrap()));
}

fn solver(c: &mut Criterion) {
    let mut g = c.benchmark_group("og10");
    g.sample_size(10);
    g.bench_function("rr integral", |b| b.iter(nieper_rhs));
    g.bench_function("rr rank", |b| b.iter(|| assemble_rr_equations().unwrap().rank()));
    g.bench_function("chern numbers", |b| b.iter(|| og10_chern_numbers().unwrap()));
    g.finish();
}

criterion_group!(benches, matchings, series, classes, solver);
criterion_main!(benches);
