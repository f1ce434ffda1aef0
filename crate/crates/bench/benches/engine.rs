use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use braidkit::braidrep::braid_structure;
use braidkit::garside::{enumerate_ball, Side};
use braidkit::linkinv::fingerprint;
use braidkit::semidirect::SemidirectInstance;
use braidkit::{smith_normal_form, ArtinRepresentation, IntegerGroup};
use braidkit_bench::{cyclic, h, integers, random_braid, random_matrix, random_positive};

fn reversing(c: &mut Criterion) {
    let s = braid_structure(4).unwrap();
    let mut group = c.benchmark_group("reversing");
    for len in [8usize, 16, 32] {
        let u = random_positive(3, len, 1);
        let v = random_positive(3, len, 2);
        let w = u.inverse().concat(&v.to_signed());
        group.bench_with_input(BenchmarkId::new("left_b4", len), &w, |b, w| {
            b.iter(|| s.monoid().reverse(black_box(w), Side::Left))
        });
    }
    group.finish();
}

fn normal_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for n in [3usize, 4] {
        let s = braid_structure(n).unwrap();
        let beta = random_braid(n, 24, 3);
        group.bench_with_input(BenchmarkId::new("fraction", n), &beta, |b, beta| {
            b.iter(|| s.group_normal_form(black_box(beta.word())).unwrap())
        });
        let p = random_positive(n - 1, 24, 4);
        group.bench_with_input(BenchmarkId::new("greedy", n), &p, |b, p| {
            b.iter(|| s.greedy_normal_form(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn artin_action(c: &mut Criterion) {
    let rep = ArtinRepresentation::from_word(integers(), &h(), 4).unwrap();
    let beta = random_braid(4, 12, 5);
    c.bench_function("artin_images_b4_len12", |b| b.iter(|| rep.images(black_box(&beta)).unwrap()));
}

fn fingerprints(c: &mut Criterion) {
    let mut group = c.benchmark_group("fingerprint");
    for len in [4usize, 8, 12] {
        let beta = random_braid(4, len, 6);
        group.bench_with_input(BenchmarkId::new("z2_b4", len), &beta, |b, beta| {
            b.iter(|| fingerprint(cyclic(2), &h(), black_box(beta)).unwrap())
        });
    }
    group.finish();
    let m = random_matrix(12, 12, 50, 7);
    c.bench_function("snf_12x12", |b| b.iter(|| smith_normal_form(black_box(&m))));
}

fn certificates(c: &mut Criterion) {
    let mut group = c.benchmark_group("certificate");
    group.sample_size(10);
    group.bench_function("semidirect_z_n3", |b| {
        b.iter(|| {
            let inst = SemidirectInstance::from_group(&IntegerGroup::new(), &h(), 3).unwrap();
            inst.certificate().unwrap()
        })
    });
    let s = braid_structure(3).unwrap();
    group.bench_function("ball_b3_norm6", |b| b.iter(|| enumerate_ball(s.presentation(), 6, 1_000_000).unwrap()));
    group.finish();
}

criterion_group!(benches, reversing, normal_forms, artin_action, fingerprints, certificates);
criterion_main!(benches);
