use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use halflib::parse::parse_nc;
use halflib::sample::Sampler;
use halflib::subspaces::ideal_span;
use halflib::{Algebra, IdealSpec, ZPoly};

fn pi(c: &mut Criterion) {
    let mut group = c.benchmark_group("pi");
    for n in [2usize, 3, 4] {
        let alg = Algebra::new(n).unwrap();
        let mut s = Sampler::new(1);
        let polys: Vec<_> = (0..16).map(|_| s.nc_poly(n, 6, 6)).collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &polys, |b, polys| {
            b.iter(|| {
                for p in polys {
                    black_box(alg.pi(p).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn cp_mul(c: &mut Criterion) {
    let mut s = Sampler::new(2);
    let xs: Vec<_> = (0..8).map(|_| s.element(3, 4, 6)).collect();
    c.bench_function("cp_mul/n3_deg4", |b| {
        b.iter(|| {
            for x in &xs {
                for y in &xs {
                    black_box(x.mul(y));
                }
            }
        })
    });
}

fn reduce(c: &mut Criterion) {
    let f = (1..=3).fold(ZPoly::zero(3), |acc, i| acc.add(&ZPoly::z(3, i).mul(&ZPoly::zbar(3, i))));
    let g = f.pow(4).mul(&ZPoly::z(3, 2).pow(2));
    c.bench_function("reduce/norm_form_pow4", |b| b.iter(|| black_box(g.reduce())));
}

fn span(c: &mut Criterion) {
    let mut group = c.benchmark_group("ideal_span");
    group.sample_size(10);
    let gens = vec![parse_nc("v1 v2 - v2 v1").unwrap(), parse_nc("v3 v3 - 1/2").unwrap()];
    for d in [3usize, 4, 5] {
        let spec = IdealSpec::new(3, gens.clone(), d).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(d), &spec, |b, spec| b.iter(|| black_box(ideal_span(spec))));
    }
    group.finish();
}

criterion_group!(benches, pi, cp_mul, reduce, span);
criterion_main!(benches);
