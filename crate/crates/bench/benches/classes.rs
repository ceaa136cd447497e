use criterion::{black_box, criterion_group, criterion_main, Criterion};
use griffiths_cli::expr::{eval_class_expr, parse_class_expr, Model};
use griffiths_core::charclass::{rho_of, todd_of, KClass};
use griffiths_core::TruncPolyRing;

fn split_bundles(c: &mut Criterion) {
    let mut g = c.benchmark_group("split bundle");
    g.sample_size(10);
    for r in [3usize, 6] {
        let ring = TruncPolyRing::new(r, r as u32 + 2);
        let k = KClass::from_roots(ring, &ring.vars());
        g.bench_function(format!("todd r={r}"), |b| b.iter(|| todd_of(black_box(&k))));
        g.bench_function(format!("rho r={r}"), |b| b.iter(|| rho_of(black_box(&k)).unwrap()));
    }
    g.finish();
}

fn expressions(c: &mut Criterion) {
    let text = "push(((1 - c1(L))^-1 * c(Om))[4])";
    let model: Model = "pe:3:2".parse().unwrap();
    c.bench_function("parse pushforward expression", |b| b.iter(|| parse_class_expr(black_box(text)).unwrap()));
    let ast = parse_class_expr(text).unwrap();
    c.bench_function("eval pushforward expression", |b| b.iter(|| eval_class_expr(black_box(&ast), &model).unwrap()));
}

criterion_group!(benches, split_bundles, expressions);
criterion_main!(benches);
