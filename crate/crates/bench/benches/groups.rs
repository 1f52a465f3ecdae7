use criterion::{criterion_group, criterion_main, Criterion};

use cubic27::fermat::{embedded_group, fermat_aut_group, find_marking};
use cubic27::weyl::{carter_census, generate, reflection_perms};
use cubic27::PermGroup;

fn we6_closure(c: &mut Criterion) {
    let gens = reflection_perms().unwrap();
    let mut g = c.benchmark_group("closure");
    g.sample_size(10);
    g.bench_function("we6_from_reflections", |b| b.iter(|| PermGroup::closure(27, &gens).unwrap().order()));
    g.bench_function("wd5_roots", |b| b.iter(|| generate(5).unwrap().order()));
    g.finish();
}

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("carter_types", |b| b.iter(carter_census));
    g.finish();
}

fn fermat(c: &mut Criterion) {
    let m = find_marking().unwrap();
    let mut g = c.benchmark_group("fermat");
    g.sample_size(10);
    g.bench_function("aut_group", |b| b.iter(fermat_aut_group));
    g.bench_function("marking", |b| b.iter(|| find_marking().unwrap()));
    g.bench_function("embed_648", |b| b.iter(|| embedded_group(&m).unwrap().order()));
    g.finish();
}

criterion_group!(benches, we6_closure, census, fermat);
criterion_main!(benches);
